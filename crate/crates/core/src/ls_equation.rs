//! The equation `x^j y^k = z^l`: detection, the five parametric families of
//! solutions, classification of a given solution into its family, and the
//! uniqueness of the exponent pair for a binary code.
//!
//! With `|y| <= |x|`, every solution falls in exactly one family:
//!
//! * `A`: `x = r^m`, `y = r^n`, `z = r^t` with `mj + nk = tl` (commuting words);
//! * `B`: `j = k = 1`, `x = (rq)^m r`, `y = q(rq)^n`, `z = rq`, `m + n + 1 = l`;
//! * `C`: `j = l = 2`, `k = 1`, `x = (rq)^m r`, `y = qrrq`, `z = (rq)^m rrq`, `m >= 2`;
//! * `D`: `j = 1`, `k >= 2`, `x = (qr^k)^(l-1) q`, `y = r`, `z = qr^k`;
//! * `E`: `j = 1`, `k >= 2`, `m >= 1`, `y = r(qr)^m`, `z = qr y^(k-1)`,
//!   `x = z^(l-2) qr y^(k-2) rq`;
//!
//! where in `B`-`E` the words `r` and `q` do not commute.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{commutation_root, concat, is_primitive, power, primitive_root, solve_conjugation, Word};

/// A verified instance of `x^j y^k = z^l` with nonempty words, `j, k >= 1`
/// and `l >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LsSolution {
    x: Word,
    y: Word,
    z: Word,
    j: usize,
    k: usize,
    ell: usize,
}

impl LsSolution {
    pub fn new(x: Word, y: Word, z: Word, j: usize, k: usize, ell: usize) -> Result<Self> {
        if x.is_empty() || y.is_empty() || z.is_empty() {
            return Err(Error::EmptyWord);
        }
        if j == 0 || k == 0 || ell < 2 {
            return Err(Error::PreconditionViolated("need j, k >= 1 and l >= 2"));
        }
        if concat(&[power(&x, j), power(&y, k)]) != power(&z, ell) {
            return Err(Error::EquationFails);
        }
        Ok(LsSolution { x, y, z, j, k, ell })
    }

    pub fn x(&self) -> &Word {
        &self.x
    }

    pub fn y(&self) -> &Word {
        &self.y
    }

    pub fn z(&self) -> &Word {
        &self.z
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `x^j y^k = z^l : x j y k z l`
    pub fn to_record(&self) -> String {
        format!(
            "x^j y^k = z^l : {} {} {} {} {} {}",
            self.x, self.j, self.y, self.k, self.z, self.ell
        )
    }
}

impl fmt::Display for LsSolution {
    /// `x^j y^k = z^l` with the actual words and exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^{} {}^{} = {}^{}",
            self.x, self.j, self.y, self.k, self.z, self.ell
        )
    }
}

fn parse_num(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {s:?}")))
}

fn parse_power(tok: &str) -> Result<(Word, usize)> {
    let (base, exp) = tok
        .rsplit_once('^')
        .ok_or_else(|| Error::Parse(format!("expected word^exponent, got {tok:?}")))?;
    Ok((base.parse()?, parse_num(exp)?))
}

impl FromStr for LsSolution {
    type Err = Error;

    /// Accepts both `abba^1 b^2 = abb^2` and the record form
    /// `x^j y^k = z^l : abba 1 b 2 abb 2`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some((_, rest)) = s.split_once(':') {
            let t: Vec<&str> = rest.split_whitespace().collect();
            let [x, j, y, k, z, l] = t[..] else {
                return Err(Error::Parse(format!("expected six record fields in {s:?}")));
            };
            return LsSolution::new(
                x.parse()?,
                y.parse()?,
                z.parse()?,
                parse_num(j)?,
                parse_num(k)?,
                parse_num(l)?,
            );
        }
        let t: Vec<&str> = s.split_whitespace().collect();
        let [xj, yk, "=", zl] = t[..] else {
            return Err(Error::Parse(format!("expected `x^j y^k = z^l`, got {s:?}")));
        };
        let (x, j) = parse_power(xj)?;
        let (y, k) = parse_power(yk)?;
        let (z, l) = parse_power(zl)?;
        LsSolution::new(x, y, z, j, k, l)
    }
}

/// Parametric family of a solution.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LsFamily {
    A { r: Word, m: usize, n: usize, t: usize },
    B { r: Word, q: Word, m: usize, n: usize },
    C { r: Word, q: Word, m: usize },
    D { r: Word, q: Word, k: usize, ell: usize },
    E { r: Word, q: Word, m: usize, k: usize, ell: usize },
}

impl LsFamily {
    pub fn tag(&self) -> char {
        match self {
            LsFamily::A { .. } => 'A',
            LsFamily::B { .. } => 'B',
            LsFamily::C { .. } => 'C',
            LsFamily::D { .. } => 'D',
            LsFamily::E { .. } => 'E',
        }
    }

    /// The exponents `(j, k, l)` fixed by the family parameters; `None` for
    /// `A`, whose exponents are free up to `mj + nk = tl`.
    pub fn implied_exponents(&self) -> Option<(usize, usize, usize)> {
        match *self {
            LsFamily::A { .. } => None,
            LsFamily::B { m, n, .. } => Some((1, 1, m + n + 1)),
            LsFamily::C { .. } => Some((2, 1, 2)),
            LsFamily::D { k, ell, .. } | LsFamily::E { k, ell, .. } => Some((1, k, ell)),
        }
    }
}

impl fmt::Display for LsFamily {
    /// `TAG{param=value,...}`, e.g. `C{r=a,q=b,m=2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LsFamily::A { r, m, n, t } => write!(f, "A{{r={r},m={m},n={n},t={t}}}"),
            LsFamily::B { r, q, m, n } => write!(f, "B{{r={r},q={q},m={m},n={n}}}"),
            LsFamily::C { r, q, m } => write!(f, "C{{r={r},q={q},m={m}}}"),
            LsFamily::D { r, q, k, ell } => write!(f, "D{{r={r},q={q},k={k},l={ell}}}"),
            LsFamily::E { r, q, m, k, ell } => {
                write!(f, "E{{r={r},q={q},m={m},k={k},l={ell}}}")
            }
        }
    }
}

impl FromStr for LsFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed family {s:?}"));
        let body = s
            .get(1..)
            .and_then(|b| b.strip_prefix('{'))
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(bad)?;
        let mut params = std::collections::HashMap::new();
        for kv in body.split(',') {
            let (key, value) = kv.split_once('=').ok_or_else(bad)?;
            if params.insert(key.trim(), value.trim()).is_some() {
                return Err(Error::Parse(format!("duplicate parameter {key:?} in {s:?}")));
            }
        }
        let tag = s.chars().next().ok_or_else(bad)?;
        let expected: &[&str] = match tag {
            'A' => &["r", "m", "n", "t"],
            'B' => &["r", "q", "m", "n"],
            'C' => &["r", "q", "m"],
            'D' => &["r", "q", "k", "l"],
            'E' => &["r", "q", "m", "k", "l"],
            _ => return Err(Error::Parse(format!("unknown family tag {tag:?}"))),
        };
        if params.len() != expected.len() || expected.iter().any(|k| !params.contains_key(k)) {
            return Err(Error::Parse(format!(
                "family {tag} takes parameters {}",
                expected.join(",")
            )));
        }
        let word = |k: &str| params[k].parse::<Word>();
        let num = |k: &str| parse_num(params[k]);
        Ok(match tag {
            'A' => LsFamily::A { r: word("r")?, m: num("m")?, n: num("n")?, t: num("t")? },
            'B' => LsFamily::B { r: word("r")?, q: word("q")?, m: num("m")?, n: num("n")? },
            'C' => LsFamily::C { r: word("r")?, q: word("q")?, m: num("m")? },
            'D' => LsFamily::D { r: word("r")?, q: word("q")?, k: num("k")?, ell: num("l")? },
            _ => LsFamily::E {
                r: word("r")?,
                q: word("q")?,
                m: num("m")?,
                k: num("k")?,
                ell: num("l")?,
            },
        })
    }
}

/// `Some` iff `x^j y^k` is imprimitive; `z` is its primitive root.
pub fn ls_check(x: &[u8], y: &[u8], j: usize, k: usize) -> Result<Option<LsSolution>> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyWord);
    }
    if j == 0 || k == 0 {
        return Err(Error::PreconditionViolated("exponents must be positive"));
    }
    let product = concat(&[power(x, j), power(y, k)]);
    let root = primitive_root(&product)?;
    if root.exponent < 2 {
        return Ok(None);
    }
    LsSolution::new(x.into(), y.into(), root.root, j, k, root.exponent).map(Some)
}

fn commute(a: &[u8], b: &[u8]) -> bool {
    [a, b].concat() == [b, a].concat()
}

fn require(cond: bool, what: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConstraintViolated(what))
    }
}

/// Builds the solution described by a family and exponents.
pub fn instantiate_family(f: &LsFamily, j: usize, k: usize, ell: usize) -> Result<LsSolution> {
    let (x, y, z) = match f {
        LsFamily::A { r, m, n, t } => {
            require(!r.is_empty(), "r must be nonempty")?;
            require(*m > 0 && *n > 0 && *t > 0, "m, n, t must be positive")?;
            require(m * j + n * k == t * ell, "m·j + n·k = t·l")?;
            (power(r, *m), power(r, *n), power(r, *t))
        }
        LsFamily::B { r, q, m, n } => {
            require(j == 1 && k == 1, "j = k = 1")?;
            require(m + n + 1 == ell, "m + n + 1 = l")?;
            require(!commute(r, q), "r·q differs from q·r")?;
            let rq = r.join(q);
            (power(&rq, *m).join(r), q.join(&power(&rq, *n)), rq)
        }
        LsFamily::C { r, q, m } => {
            require(j == 2 && k == 1 && ell == 2, "j = l = 2 and k = 1")?;
            require(*m >= 2, "m >= 2")?;
            require(!commute(r, q), "r·q differs from q·r")?;
            let x = power(&r.join(q), *m).join(r);
            let y = concat(&[q, r, r, q]);
            let z = concat(&[&x[..], r, q]);
            (x, y, z)
        }
        LsFamily::D { r, q, k: fk, ell: fl } => {
            require(j == 1 && k == *fk && ell == *fl, "j = 1 and k, l match the family")?;
            require(*fk >= 2 && *fl >= 2, "k >= 2 and l >= 2")?;
            require(!commute(r, q), "r·q differs from q·r")?;
            let z = q.join(&power(r, *fk));
            (power(&z, fl - 1).join(q), r.clone(), z)
        }
        LsFamily::E { r, q, m, k: fk, ell: fl } => {
            require(j == 1 && k == *fk && ell == *fl, "j = 1 and k, l match the family")?;
            require(*fk >= 2 && *fl >= 2, "k >= 2 and l >= 2")?;
            require(*m >= 1, "m >= 1")?;
            require(!commute(r, q), "r·q differs from q·r")?;
            let qr = q.join(r);
            let y = r.join(&power(&qr, *m));
            let z = qr.join(&power(&y, fk - 1));
            let x = concat(&[
                power(&z, fl - 2),
                qr.clone(),
                power(&y, fk - 2),
                r.join(q),
            ]);
            (x, y, z)
        }
    };
    LsSolution::new(x, y, z, j, k, ell)
}

/// Reverses all words and swaps `(x, j)` with `(y, k)`.
pub fn mirror_solution(s: &LsSolution) -> LsSolution {
    LsSolution {
        x: s.y.reversed(),
        y: s.x.reversed(),
        z: s.z.reversed(),
        j: s.k,
        k: s.j,
        ell: s.ell,
    }
}

/// Recovers the family of a solution with `|y| <= |x|` by following the case
/// analysis on the exponents, and checks that the family reproduces it.
pub fn classify_solution(s: &LsSolution) -> Result<LsFamily> {
    let (x, y, z) = (&s.x, &s.y, &s.z);
    let (j, k, ell) = (s.j, s.k, s.ell);
    if y.len() > x.len() {
        return Err(Error::NotNormalized);
    }
    let contradiction = Error::InternalContradiction;

    let family = if let Some((root, m, n)) = commutation_root(x, y) {
        LsFamily::A { t: z.len() / root.len(), r: root, m, n }
    } else if j == 1 && k == 1 {
        // z^m r = x with r a strict prefix of z, and z = rq
        let m = x.len() / z.len();
        let r = Word::from(&x[m * z.len()..]);
        let q = Word::from(&z[r.len()..]);
        let n = ell
            .checked_sub(m + 1)
            .ok_or(contradiction("x is longer than z^(l-1)"))?;
        LsFamily::B { r, q, m, n }
    } else if j >= 2 && k == 1 {
        // z = x^(j-1) u, x = u v = v u'
        let head = (j - 1) * x.len();
        if z.len() <= head || z.len() - head >= x.len() {
            return Err(contradiction("z is not of the form x^(j-1) u with u shorter than x"));
        }
        let u = &z[head..];
        let v = &x[u.len()..];
        let u2 = &x[v.len()..];
        let (r, q, n) =
            solve_conjugation(u, u2, v).map_err(|_| contradiction("u·v differs from v·u'"))?;
        LsFamily::C { r, q, m: n + 1 }
    } else if j == 1 && k >= 2 {
        let tail = k * y.len();
        if z.len() >= tail {
            // z = q y^k
            let q = Word::from(&z[..z.len() - tail]);
            LsFamily::D { r: y.clone(), q, k, ell }
        } else {
            // z = u y^(k-1), y = v u = u' v
            let rest = (k - 1) * y.len();
            if z.len() <= rest {
                return Err(contradiction("z is not longer than y^(k-1)"));
            }
            let u = &z[..z.len() - rest];
            let v = &y[..y.len() - u.len()];
            let u2 = &y[..u.len()];
            let (r, q, n) =
                solve_conjugation(u2, u, v).map_err(|_| contradiction("u'·v differs from v·u"))?;
            LsFamily::E { r, q, m: n + 1, k, ell }
        }
    } else {
        return Err(contradiction("j, k >= 2 with non-commuting x and y"));
    };

    match instantiate_family(&family, j, k, ell) {
        Ok(back) if back == *s => Ok(family),
        _ => Err(contradiction("the recovered family does not reproduce the solution")),
    }
}

/// Mirrors the solution first when `|y| > |x|`. The flag records the mirror.
pub fn classify_any(s: &LsSolution) -> Result<(LsFamily, bool)> {
    if s.y.len() > s.x.len() {
        Ok((classify_solution(&mirror_solution(s))?, true))
    } else {
        Ok((classify_solution(s)?, false))
    }
}

/// All `(j, k)` in `[1, j_max] × [1, k_max]` with `x^j y^k` imprimitive.
pub fn unique_exponents(
    x: &[u8],
    y: &[u8],
    j_max: usize,
    k_max: usize,
) -> Result<BTreeSet<(usize, usize)>> {
    if x.is_empty() || y.is_empty() || commute(x, y) {
        return Err(Error::NotACode);
    }
    let mut hits = BTreeSet::new();
    for j in 1..=j_max {
        for k in 1..=k_max {
            if !is_primitive(&concat(&[power(x, j), power(y, k)])) {
                hits.insert((j, k));
            }
        }
    }
    Ok(hits)
}

/// Exponent bounds that contain every imprimitive `x^j y^k` when
/// `|y| <= |x|`: `j <= 2` and `k <= |x|/|y| + 2`.
pub fn default_exponent_bounds(x: &[u8], y: &[u8]) -> (usize, usize) {
    (2, x.len() / y.len().max(1) + 2)
}

/// Both `uv` and `uvv` are imprimitive, in which case `u` and `v` commute.
pub fn imprim_ext_suf_commutes(u: &[u8], v: &[u8]) -> Result<bool> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(!is_primitive(&[u, v].concat()) && !is_primitive(&[u, v, v].concat()))
}

/// `x^j y^k = z^l`; for `j, k, l >= 2` this forces `x`, `y`, `z` to commute.
pub fn ls_theorem_holds(x: &[u8], y: &[u8], z: &[u8], j: usize, k: usize, ell: usize) -> bool {
    concat(&[power(x, j), power(y, k)]) == power(z, ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn sol(x: &str, y: &str, z: &str, j: usize, k: usize, l: usize) -> LsSolution {
        LsSolution::new(w(x), w(y), w(z), j, k, l).unwrap()
    }

    #[test]
    fn check_examples() {
        let s = ls_check(b"abba", b"b", 1, 2).unwrap().unwrap();
        assert_eq!((s.z().clone(), s.ell()), (w("abb"), 2));
        // x²y = (x·p)² with p = 01 from the square interpretation figure
        let s = ls_check(b"01010", b"1001", 2, 1).unwrap().unwrap();
        assert_eq!((s.z().clone(), s.ell()), (w("0101001"), 2));
        assert_eq!(ls_check(b"ab", b"cd", 1, 1).unwrap(), None);
        assert_eq!(ls_check(b"", b"cd", 1, 1), Err(Error::EmptyWord));
    }

    #[test]
    fn instantiation_examples() {
        let c = LsFamily::C { r: w("a"), q: w("b"), m: 2 };
        assert_eq!(instantiate_family(&c, 2, 1, 2).unwrap(), sol("ababa", "baab", "ababaab", 2, 1, 2));

        let d = LsFamily::D { r: w("b"), q: w("a"), k: 2, ell: 2 };
        assert_eq!(instantiate_family(&d, 1, 2, 2).unwrap(), sol("abba", "b", "abb", 1, 2, 2));

        let e = LsFamily::E { r: w("a"), q: w("b"), m: 1, k: 2, ell: 2 };
        assert_eq!(instantiate_family(&e, 1, 2, 2).unwrap(), sol("baab", "aba", "baaba", 1, 2, 2));

        let a = LsFamily::A { r: w("ab"), m: 2, n: 1, t: 1 };
        assert_eq!(instantiate_family(&a, 1, 2, 4).unwrap(), sol("abab", "ab", "ab", 1, 2, 4));

        let b = LsFamily::B { r: w("a"), q: w("b"), m: 1, n: 0 };
        assert_eq!(instantiate_family(&b, 1, 1, 2).unwrap(), sol("aba", "b", "ab", 1, 1, 2));
    }

    #[test]
    fn instantiation_errors() {
        let commuting = LsFamily::C { r: w("a"), q: w("aa"), m: 2 };
        assert!(matches!(
            instantiate_family(&commuting, 2, 1, 2),
            Err(Error::ConstraintViolated("r·q differs from q·r"))
        ));
        let c = LsFamily::C { r: w("a"), q: w("b"), m: 1 };
        assert!(matches!(instantiate_family(&c, 2, 1, 2), Err(Error::ConstraintViolated("m >= 2"))));
        let c = LsFamily::C { r: w("a"), q: w("b"), m: 2 };
        assert!(matches!(instantiate_family(&c, 1, 1, 2), Err(Error::ConstraintViolated(_))));
        let a = LsFamily::A { r: w("ab"), m: 2, n: 1, t: 1 };
        assert!(matches!(
            instantiate_family(&a, 1, 1, 2),
            Err(Error::ConstraintViolated("m·j + n·k = t·l"))
        ));
        let b = LsFamily::B { r: w("a"), q: w("b"), m: 1, n: 1 };
        assert!(matches!(
            instantiate_family(&b, 1, 1, 2),
            Err(Error::ConstraintViolated("m + n + 1 = l"))
        ));
        let d = LsFamily::D { r: w("b"), q: w("a"), k: 2, ell: 2 };
        assert!(matches!(instantiate_family(&d, 1, 3, 2), Err(Error::ConstraintViolated(_))));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_solution(&sol("abba", "b", "abb", 1, 2, 2)).unwrap(),
            LsFamily::D { r: w("b"), q: w("a"), k: 2, ell: 2 }
        );
        assert_eq!(
            classify_solution(&sol("ababa", "baab", "ababaab", 2, 1, 2)).unwrap(),
            LsFamily::C { r: w("a"), q: w("b"), m: 2 }
        );
        assert_eq!(
            classify_solution(&sol("abab", "ab", "ab", 1, 1, 3)).unwrap(),
            LsFamily::A { r: w("ab"), m: 2, n: 1, t: 1 }
        );
        assert_eq!(
            classify_solution(&sol("baab", "aba", "baaba", 1, 2, 2)).unwrap(),
            LsFamily::E { r: w("a"), q: w("b"), m: 1, k: 2, ell: 2 }
        );
        assert_eq!(
            classify_solution(&sol("aba", "b", "ab", 1, 1, 2)).unwrap(),
            LsFamily::B { r: w("a"), q: w("b"), m: 1, n: 0 }
        );
        assert_eq!(
            classify_solution(&sol("b", "abba", "bba", 2, 1, 2)),
            Err(Error::NotNormalized)
        );
    }

    #[test]
    fn mirror() {
        let s = sol("abba", "b", "abb", 1, 2, 2);
        let m = mirror_solution(&s);
        assert_eq!(m, sol("b", "abba", "bba", 2, 1, 2));
        assert_eq!(mirror_solution(&m), s);
        let p = sol("aba", "aba", "aba", 1, 1, 2);
        assert_eq!(mirror_solution(&p), p);
        let (f, mirrored) = classify_any(&m).unwrap();
        assert!(mirrored);
        assert_eq!(f.tag(), 'D');
    }

    #[test]
    fn exponent_uniqueness_examples() {
        assert_eq!(unique_exponents(b"abba", b"b", 6, 6).unwrap(), BTreeSet::from([(1, 2)]));
        assert!(unique_exponents(b"a", b"b", 6, 6).unwrap().is_empty());
        assert_eq!(unique_exponents(b"ababa", b"baab", 6, 6).unwrap(), BTreeSet::from([(2, 1)]));
        assert_eq!(unique_exponents(b"ab", b"abab", 2, 2), Err(Error::NotACode));
        assert_eq!(default_exponent_bounds(b"abba", b"b"), (2, 6));
    }

    #[test]
    fn suffix_extension_lemma() {
        assert!(imprim_ext_suf_commutes(b"a", b"a").unwrap());
        assert!(!imprim_ext_suf_commutes(b"ab", b"b").unwrap());
        let words: Vec<Vec<u8>> = (1..=5usize)
            .flat_map(|n| (0..1u32 << n).map(move |b| (0..n).map(|i| b'a' + ((b >> i) & 1) as u8).collect()))
            .collect();
        for u in &words {
            for v in &words {
                if imprim_ext_suf_commutes(u, v).unwrap() {
                    assert!(commute(u, v), "{u:?} {v:?}");
                }
            }
        }
    }

    #[test]
    fn ls_theorem_examples() {
        assert!(ls_theorem_holds(b"a", b"a", b"aa", 2, 2, 2));
        assert!(!ls_theorem_holds(b"ab", b"ba", b"ab", 2, 2, 2));
    }

    #[test]
    fn text_round_trips() {
        let s = sol("abba", "b", "abb", 1, 2, 2);
        assert_eq!(s.to_string(), "abba^1 b^2 = abb^2");
        assert_eq!(s.to_string().parse::<LsSolution>().unwrap(), s);
        assert_eq!(s.to_record(), "x^j y^k = z^l : abba 1 b 2 abb 2");
        assert_eq!(s.to_record().parse::<LsSolution>().unwrap(), s);
        assert_eq!("ab^2 b^1 = ab^2".parse::<LsSolution>(), Err(Error::EquationFails));

        for text in [
            "A{r=ab,m=2,n=1,t=1}",
            "B{r=a,q=b,m=1,n=0}",
            "C{r=a,q=b,m=2}",
            "D{r=b,q=a,k=2,l=2}",
            "E{r=a,q=b,m=1,k=2,l=2}",
        ] {
            let f: LsFamily = text.parse().unwrap();
            assert_eq!(f.to_string(), text);
        }
        assert!("C{r=a,q=b}".parse::<LsFamily>().is_err());
        assert!("F{r=a}".parse::<LsFamily>().is_err());
        assert!("C{r=a,q=b,m=x}".parse::<LsFamily>().is_err());
    }
}
