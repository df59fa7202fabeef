//! Brute-force ground truth for the exhaustive suites.
//!
//! Everything here works from the definitions alone: primitivity by trying
//! every proper divisor period, interpretations by trying every set of cut
//! positions, witnesses by enumerating every list. None of it goes through
//! border tables or the reachability DP used on the fast paths.

use crate::error::{Error, Result};
use crate::interpretations::Interpretation;
use crate::ls_equation::{instantiate_family, LsFamily, LsSolution};
use crate::primpres::BinaryCode;
use crate::words::{Word, WordList};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub alphabet_size: usize,
    pub max_word_len: usize,
    pub max_list_len: usize,
}

impl EnumConfig {
    pub fn new(alphabet_size: usize, max_word_len: usize, max_list_len: usize) -> Result<Self> {
        if alphabet_size == 0 || max_word_len == 0 || max_list_len == 0 {
            return Err(Error::PreconditionViolated("enumeration bounds must be at least 1"));
        }
        if alphabet_size > 26 {
            return Err(Error::PreconditionViolated("at most 26 letters"));
        }
        Ok(EnumConfig { alphabet_size, max_word_len, max_list_len })
    }

    /// Binary alphabet with the given word length bound.
    pub fn binary(max_word_len: usize) -> Self {
        EnumConfig { alphabet_size: 2, max_word_len, max_list_len: 1 }
    }
}

/// Smallest `d` dividing `|s|` with `s = s[..d]^(|s|/d)`.
pub fn naive_root_len<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    (1..=n)
        .find(|&d| n.is_multiple_of(d) && (d..n).all(|i| s[i] == s[i - d]))
        .unwrap_or(0)
}

pub fn naive_is_primitive<T: PartialEq>(s: &[T]) -> bool {
    !s.is_empty() && naive_root_len(s) == s.len()
}

/// Some rotation of `u` equals `v`.
pub fn naive_conjugate<T: PartialEq + Clone>(u: &[T], v: &[T]) -> bool {
    u.len() == v.len()
        && (0..u.len().max(1)).any(|i| {
            let rotated: Vec<T> = u.iter().skip(i).chain(u.iter().take(i)).cloned().collect();
            rotated == v
        })
}

/// All words of exactly `len` letters over the first `alphabet_size`
/// letters, in lexicographic order.
pub fn words_of_len(alphabet_size: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                (0..alphabet_size as u8).map(move |c| {
                    let mut n = w.clone();
                    n.push(b'a' + c);
                    n
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

/// All nonempty words up to `max_word_len`, by length and then
/// lexicographically.
pub fn enum_words(cfg: &EnumConfig) -> Vec<Word> {
    (1..=cfg.max_word_len)
        .flat_map(|n| words_of_len(cfg.alphabet_size, n))
        .collect()
}

/// Every code `{x, y}` once, with `|y| <= |x|` and `x < y` on equal lengths.
pub fn enum_codes(cfg: &EnumConfig) -> Vec<BinaryCode> {
    let words = enum_words(cfg);
    let mut out = Vec::new();
    for x in &words {
        for y in &words {
            let ordered = y.len() < x.len() || (y.len() == x.len() && x < y);
            if ordered && x.join(y) != y.join(x) {
                out.push(BinaryCode::new(x.clone(), y.clone()).expect("checked non-commuting"));
            }
        }
    }
    out
}

/// All tag sequences of length `len`, lexicographic with `x` before `y`.
pub fn tag_sequences(len: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << len).map(move |bits| (0..len).map(|i| (bits >> (len - 1 - i)) & 1 == 1).collect())
}

/// Every list of length `2..=max_list_len` over the code that is primitive
/// as a list and has an imprimitive concatenation.
pub fn brute_witnesses(code: &BinaryCode, max_list_len: usize) -> Vec<WordList> {
    let mut out = Vec::new();
    for len in 2..=max_list_len {
        for tags in tag_sequences(len) {
            if !naive_is_primitive(&tags) {
                continue;
            }
            let ws = code.list_from_tags(&tags);
            if !naive_is_primitive(&ws.concat()) {
                out.push(ws);
            }
        }
    }
    out
}

/// Interpretations of `u` by trying every set of interior cut positions and
/// every choice of overhanging first and last factor.
pub fn brute_interpretations(u: &[u8], gens: &[Word]) -> Vec<Interpretation> {
    let mut gens: Vec<Word> = gens.to_vec();
    gens.sort();
    gens.dedup();
    let n = u.len();
    let target = Word::from(u);
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }

    for mask in 0u64..1 << (n - 1) {
        // cuts strictly inside u
        let cuts: Vec<usize> = (1..n).filter(|&c| (mask >> (c - 1)) & 1 == 1).collect();
        let mut bounds = vec![0];
        bounds.extend(&cuts);
        bounds.push(n);
        let pieces: Vec<&[u8]> = bounds.windows(2).map(|b| &u[b[0]..b[1]]).collect();

        if pieces.len() == 1 {
            // a single factor g = p · u · s
            for g in &gens {
                for plen in 0..g.len() {
                    if plen + n <= g.len() && &g[plen..plen + n] == u {
                        let p = Word::from(&g[..plen]);
                        let s = Word::from(&g[plen + n..]);
                        if let Ok(i) = Interpretation::new(p, s, WordList::new(vec![g.clone()]), target.clone()) {
                            out.push(i);
                        }
                    }
                }
            }
            continue;
        }

        let middle = &pieces[1..pieces.len() - 1];
        if !middle.iter().all(|m| gens.iter().any(|g| &g[..] == *m)) {
            continue;
        }
        let first = pieces[0];
        let last = pieces[pieces.len() - 1];
        for h in gens.iter().filter(|h| h.len() >= first.len() && h.ends_with(first)) {
            for l in gens.iter().filter(|l| l.len() >= last.len() && l.starts_with(last)) {
                let p = Word::from(&h[..h.len() - first.len()]);
                let s = Word::from(&l[last.len()..]);
                let mut factors = vec![h.clone()];
                factors.extend(middle.iter().map(|m| Word::from(*m)));
                factors.push(l.clone());
                if let Ok(i) = Interpretation::new(p, s, WordList::new(factors), target.clone()) {
                    out.push(i);
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.p().len()
            .cmp(&b.p().len())
            .then_with(|| a.factors().cmp(b.factors()))
    });
    out
}

/// Every `(x, y, j, k)` with words from `enum_words(cfg)` and exponents up to
/// `max_exp` such that `x^j y^k` is imprimitive.
pub fn brute_ls_solutions(cfg: &EnumConfig, max_exp: usize) -> Vec<LsSolution> {
    let words = enum_words(cfg);
    let mut out = Vec::new();
    for x in &words {
        for y in &words {
            for j in 1..=max_exp {
                for k in 1..=max_exp {
                    if let Some(s) = naive_solution(x, y, j, k) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// `x^j y^k` as `z^l` with `z` primitive, when `l >= 2`.
pub fn naive_solution(x: &Word, y: &Word, j: usize, k: usize) -> Option<LsSolution> {
    let product = [x.repeat(j), y.repeat(k)].concat();
    let d = naive_root_len(&product);
    let ell = product.len() / d.max(1);
    if ell < 2 {
        return None;
    }
    let z = Word::from(&product[..d]);
    LsSolution::new(x.clone(), y.clone(), z, j, k, ell).ok()
}

/// Family tags whose parameters, found by searching over splits of the
/// solution's words, reproduce the solution.
pub fn brute_family_matches(s: &LsSolution) -> Vec<char> {
    let (x, y, z) = (s.x(), s.y(), s.z());
    let (j, k, ell) = (s.j(), s.k(), s.ell());
    let reproduces = |f: LsFamily| instantiate_family(&f, j, k, ell).is_ok_and(|t| t == *s);
    let sub = |w: &Word, a: usize, b: usize| Word::from(&w[a..b]);
    let mut tags = Vec::new();

    let a = (1..=x.len()).any(|d| {
        x.len() % d == 0
            && y.len() % d == 0
            && z.len() % d == 0
            && reproduces(LsFamily::A {
                r: sub(x, 0, d),
                m: x.len() / d,
                n: y.len() / d,
                t: z.len() / d,
            })
    });
    if a {
        tags.push('A');
    }

    let b = j == 1
        && k == 1
        && (0..=z.len()).any(|i| {
            (0..ell).any(|m| {
                reproduces(LsFamily::B { r: sub(z, 0, i), q: sub(z, i, z.len()), m, n: ell - 1 - m })
            })
        });
    if b {
        tags.push('B');
    }

    let c = (1..=x.len()).any(|lrq| {
        (0..=lrq).any(|lr| {
            (2..=x.len() / lrq).any(|m| {
                reproduces(LsFamily::C { r: sub(x, 0, lr), q: sub(x, lr, lrq), m })
            })
        })
    });
    if c {
        tags.push('C');
    }

    let d = (0..=z.len()).any(|lq| {
        reproduces(LsFamily::D { r: y.clone(), q: sub(z, 0, lq), k, ell })
    });
    if d {
        tags.push('D');
    }

    let e = (0..=y.len()).any(|lr| {
        (0..=y.len() - lr).any(|lq| {
            (1..=y.len()).any(|m| {
                reproduces(LsFamily::E {
                    r: sub(y, 0, lr),
                    q: sub(y, lr, lr + lq),
                    m,
                    k,
                    ell,
                })
            })
        })
    });
    if e {
        tags.push('E');
    }
    tags
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    #[test]
    fn word_enumeration() {
        let words = enum_words(&EnumConfig::new(2, 2, 1).unwrap());
        let shown: Vec<String> = words.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["a", "b", "aa", "ab", "ba", "bb"]);
        let words = enum_words(&EnumConfig::new(1, 3, 1).unwrap());
        assert_eq!(words, [w("a"), w("aa"), w("aaa")]);
        for n in 1..=8 {
            assert_eq!(enum_words(&EnumConfig::binary(n)).len(), (1 << (n + 1)) - 2);
        }
        assert!(EnumConfig::new(0, 1, 1).is_err());
    }

    #[test]
    fn code_enumeration() {
        let codes = enum_codes(&EnumConfig::binary(2));
        let has = |x: &str, y: &str| codes.iter().any(|c| c.x() == &w(x) && c.y() == &w(y));
        assert!(has("ab", "a"));
        assert!(!has("aa", "a"));
        assert!(codes.iter().all(|c| c.x() != c.y()));
        let single = enum_codes(&EnumConfig::binary(1));
        assert_eq!(single.len(), 1);
        assert_eq!((single[0].x(), single[0].y()), (&w("a"), &w("b")));
        let bigger = enum_codes(&EnumConfig::binary(3));
        assert!(!bigger.iter().any(|c| c.x() == &w("abab") || (c.x() == &w("ab") && c.y() == &w("ab"))));
    }

    #[test]
    fn naive_primitivity() {
        assert!(naive_is_primitive(b"abb"));
        assert!(!naive_is_primitive(b"abab"));
        assert!(!naive_is_primitive(b""));
        assert!(naive_conjugate(b"abba", b"baab"));
        assert!(!naive_conjugate(b"abba", b"abab"));
    }

    #[test]
    fn witness_examples() {
        let code = BinaryCode::new(w("abba"), w("b")).unwrap();
        let found: Vec<String> = brute_witnesses(&code, 4).iter().map(ToString::to_string).collect();
        assert_eq!(found, ["abba.b.b", "b.abba.b", "b.b.abba"]);

        let code = BinaryCode::new(w("a"), w("b")).unwrap();
        assert!(brute_witnesses(&code, 6).is_empty());

        let code = BinaryCode::new(w("01010"), w("1001")).unwrap();
        let found: Vec<String> = brute_witnesses(&code, 5).iter().map(ToString::to_string).collect();
        assert_eq!(found, ["01010.01010.1001", "01010.1001.01010", "1001.01010.01010"]);
    }

    #[test]
    fn interpretation_examples() {
        assert_eq!(brute_interpretations(b"aa", &[w("aa")]).len(), 2);
        let one = brute_interpretations(b"b", &[w("ab")]);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "a | ab | -");
    }

    #[test]
    fn ls_solution_examples() {
        let sols = brute_ls_solutions(&EnumConfig::binary(4), 2);
        assert!(sols
            .iter()
            .any(|s| s.x() == &w("abba") && s.y() == &w("b") && s.j() == 1 && s.k() == 2 && s.z() == &w("abb")));
        for s in &sols {
            if s.j() >= 2 && s.k() >= 2 {
                assert_eq!(s.x().join(s.y()), s.y().join(s.x()));
            }
        }
    }

    #[test]
    fn family_search() {
        let s = LsSolution::new(w("abba"), w("b"), w("abb"), 1, 2, 2).unwrap();
        assert_eq!(brute_family_matches(&s), ['D']);
        let s = LsSolution::new(w("ababa"), w("baab"), w("ababaab"), 2, 1, 2).unwrap();
        assert_eq!(brute_family_matches(&s), ['C']);
        let s = LsSolution::new(w("abab"), w("ab"), w("ab"), 1, 1, 3).unwrap();
        assert_eq!(brute_family_matches(&s), ['A']);
    }
}
