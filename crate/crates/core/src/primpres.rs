//! Primitivity preservation of binary codes.
//!
//! A set of words is primitivity preserving when no primitive list of length
//! at least two over it concatenates to an imprimitive word. For a binary
//! code `{x, y}` with `|y| <= |x|` that is not primitivity preserving, there
//! is a unique pair `(j, k)` with `j = 1` or `(j, k) = (2, 1)` such that the
//! witnesses are exactly the list conjugates of `[x]^j [y]^k`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ls_equation::{default_exponent_bounds, ls_check};
use crate::words::{concat, is_primitive, is_primitive_seq, primitive_root, rotate, rotation_offset, Word, WordList};

/// Two nonempty words that do not commute.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    x: Word,
    y: Word,
}

impl BinaryCode {
    pub fn new(x: Word, y: Word) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptyWord);
        }
        if x.join(&y) == y.join(&x) {
            return Err(Error::NotACode);
        }
        Ok(BinaryCode { x, y })
    }

    pub fn x(&self) -> &Word {
        &self.x
    }

    pub fn y(&self) -> &Word {
        &self.y
    }

    /// The code with `|y| <= |x|`, and whether the words were swapped.
    /// Equal lengths keep the given order.
    pub fn normalized(&self) -> (BinaryCode, bool) {
        if self.y.len() > self.x.len() {
            (BinaryCode { x: self.y.clone(), y: self.x.clone() }, true)
        } else {
            (self.clone(), false)
        }
    }

    /// Tag of a list entry: `false` for `x`, `true` for `y`.
    fn tag(&self, w: &Word) -> Result<bool> {
        if *w == self.x {
            Ok(false)
        } else if *w == self.y {
            Ok(true)
        } else {
            Err(Error::AlienLetter)
        }
    }

    fn tags(&self, ws: &[Word]) -> Result<Vec<bool>> {
        ws.iter().map(|w| self.tag(w)).collect()
    }

    /// The list `[x]^j [y]^k`.
    pub fn block_list(&self, j: usize, k: usize) -> WordList {
        std::iter::repeat_n(self.x.clone(), j)
            .chain(std::iter::repeat_n(self.y.clone(), k))
            .collect()
    }

    /// The list over `{x, y}` spelled by `tags` (`false` is `x`).
    pub fn list_from_tags(&self, tags: &[bool]) -> WordList {
        tags.iter()
            .map(|&t| if t { self.y.clone() } else { self.x.clone() })
            .collect()
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl FromStr for BinaryCode {
    type Err = Error;

    /// `x,y`
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `x,y`, got {s:?}")))?;
        BinaryCode::new(x.parse()?, y.parse()?)
    }
}

pub fn make_code(x: Word, y: Word) -> Result<BinaryCode> {
    BinaryCode::new(x, y)
}

/// Primitivity of `ws` read as a word over the two-letter alphabet `{x, y}`.
pub fn list_primitive(ws: &[Word], code: &BinaryCode) -> Result<bool> {
    Ok(is_primitive_seq(&code.tags(ws)?))
}

/// A clause of the witness definition that a list fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessClause {
    /// Fewer than two entries.
    TooShort,
    /// The list is a power of a shorter list.
    ListImprimitive,
    /// The concatenation is primitive.
    ConcatPrimitive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStatus {
    pub is_witness: bool,
    pub reasons: Vec<WitnessClause>,
}

/// Whether `ws` witnesses that the code is not primitivity preserving, with
/// every failed clause listed.
pub fn check_witness(code: &BinaryCode, ws: &[Word]) -> Result<WitnessStatus> {
    let list_primitive = list_primitive(ws, code)?;
    let mut reasons = Vec::new();
    if ws.len() < 2 {
        reasons.push(WitnessClause::TooShort);
    }
    if !list_primitive {
        reasons.push(WitnessClause::ListImprimitive);
    }
    if is_primitive(&concat(ws)) {
        reasons.push(WitnessClause::ConcatPrimitive);
    }
    Ok(WitnessStatus {
        is_witness: reasons.is_empty(),
        reasons,
    })
}

/// Outcome of the decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub preserving: bool,
    /// `(j, k)` relative to the normalized code.
    pub exponents: Option<(usize, usize)>,
    pub z: Option<Word>,
    pub ell: Option<usize>,
    /// The code words were swapped to get `|y| <= |x|`.
    pub swapped: bool,
}

impl fmt::Display for WitnessReport {
    /// `PRESERVING` or `NOT_PRESERVING j=<j> k=<k> z=<z> l=<l> swapped=<0|1>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.exponents, &self.z, &self.ell) {
            (Some((j, k)), Some(z), Some(l)) => write!(
                f,
                "NOT_PRESERVING j={j} k={k} z={z} l={l} swapped={}",
                u8::from(self.swapped)
            ),
            _ => f.write_str("PRESERVING"),
        }
    }
}

impl FromStr for WitnessReport {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "PRESERVING" {
            return Ok(WitnessReport {
                preserving: true,
                exponents: None,
                z: None,
                ell: None,
                swapped: false,
            });
        }
        let bad = || Error::Parse(format!("malformed witness report {s:?}"));
        let rest = s.strip_prefix("NOT_PRESERVING ").ok_or_else(bad)?;
        let mut fields = std::collections::HashMap::new();
        for kv in rest.split_whitespace() {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            fields.insert(k, v);
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(bad);
        let num = |k: &str| get(k)?.parse::<usize>().map_err(|_| bad());
        let swapped = match get("swapped")? {
            "0" => false,
            "1" => true,
            _ => return Err(bad()),
        };
        if fields.len() != 5 {
            return Err(bad());
        }
        Ok(WitnessReport {
            preserving: false,
            exponents: Some((num("j")?, num("k")?)),
            z: Some(get("z")?.parse()?),
            ell: Some(num("l")?),
            swapped,
        })
    }
}

/// The exponent pairs the decision procedure tries for a normalized code:
/// `(2, 1)` and `(1, k)` for `k <= |x|/|y| + 2`.
pub fn candidate_exponents(code: &BinaryCode) -> Vec<(usize, usize)> {
    let (norm, _) = code.normalized();
    let (_, k_max) = default_exponent_bounds(&norm.x, &norm.y);
    std::iter::once((2, 1))
        .chain((1..=k_max).map(|k| (1, k)))
        .collect()
}

/// Decides whether the code is primitivity preserving. If not, reports the
/// unique `(j, k)` (relative to the normalized code) with `x^j y^k = z^l`.
pub fn decide(code: &BinaryCode) -> WitnessReport {
    let (norm, swapped) = code.normalized();
    for (j, k) in candidate_exponents(code) {
        if let Some(sol) = ls_check(&norm.x, &norm.y, j, k).expect("code words are nonempty") {
            return WitnessReport {
                preserving: false,
                exponents: Some((j, k)),
                z: Some(sol.z().clone()),
                ell: Some(sol.ell()),
                swapped,
            };
        }
    }
    WitnessReport {
        preserving: true,
        exponents: None,
        z: None,
        ell: None,
        swapped,
    }
}

/// Whether two lists are rotations of each other.
pub fn lists_conjugate(a: &[Word], b: &[Word]) -> bool {
    rotation_offset(a, b).is_some()
}

/// Aggregate result of an exhaustive check.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub failures: usize,
}

impl Tally {
    pub fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn merge(self, other: Tally) -> Tally {
        Tally {
            checked: self.checked + other.checked,
            failures: self.failures + other.failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "checked={} failures={}", self.checked, self.failures)
    }
}

/// Checks, for every list over the code of length `2..=max_list_len`, that it
/// is a witness exactly when it is a list conjugate of `[x]^j [y]^k` for the
/// exponents found by `decide`.
pub fn verify_theorem1_tally(code: &BinaryCode, max_list_len: usize) -> Tally {
    let report = decide(code);
    let (norm, _) = code.normalized();
    let shape = report.exponents.map(|(j, k)| norm.block_list(j, k));
    let mut tally = Tally::default();
    for len in 2..=max_list_len {
        for bits in 0u64..(1 << len) {
            let tags: Vec<bool> = (0..len).map(|i| (bits >> i) & 1 == 1).collect();
            let ws = code.list_from_tags(&tags);
            let witness = check_witness(code, &ws).expect("list drawn from the code").is_witness;
            let predicted = shape.as_ref().is_some_and(|s| lists_conjugate(&ws, s));
            tally.record(witness == predicted);
        }
    }
    tally
}

pub fn verify_theorem1(code: &BinaryCode, max_list_len: usize) -> bool {
    verify_theorem1_tally(code, max_list_len).passed()
}

/// Concatenates every maximal run of `chosen` onto the entry following it.
pub fn glue(ws: &[Word], chosen: &Word) -> Result<WordList> {
    if ws.last() == Some(chosen) {
        return Err(Error::LastIsChosen);
    }
    let mut out = Vec::new();
    let mut pending: Vec<u8> = Vec::new();
    for w in ws {
        pending.extend_from_slice(w);
        if w != chosen {
            out.push(Word::new(std::mem::take(&mut pending)));
        }
    }
    Ok(WordList::new(out))
}

/// Replaces each `x` by `e_x` copies of its primitive root and each `y` by
/// `e_y` copies of its primitive root.
pub fn root_morphism(ws: &[Word], code: &BinaryCode) -> Result<WordList> {
    let rx = primitive_root(&code.x)?;
    let ry = primitive_root(&code.y)?;
    let mut out = Vec::new();
    for tag in code.tags(ws)? {
        let r = if tag { &ry } else { &rx };
        out.extend(std::iter::repeat_n(r.root.clone(), r.exponent));
    }
    Ok(WordList::new(out))
}

/// Rotation of the list by `i` positions (taken modulo its length).
pub fn list_conjugate(ws: &[Word], i: usize) -> WordList {
    WordList::new(rotate(ws, i))
}

/// `[c, c]` occurs in some rotation of the list.
pub fn has_cyclic_square(ws: &[Word], c: &Word) -> bool {
    let n = ws.len();
    n >= 2 && (0..n).any(|i| ws[i] == *c && ws[(i + 1) % n] == *c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from(s)
    }

    fn code(x: &str, y: &str) -> BinaryCode {
        make_code(w(x), w(y)).unwrap()
    }

    #[test]
    fn codes() {
        assert!(make_code(w("abba"), w("b")).is_ok());
        assert_eq!(make_code(w("ab"), w("abab")), Err(Error::NotACode));
        assert_eq!(make_code(w("a"), w("")), Err(Error::EmptyWord));
        assert_eq!("abba,b".parse::<BinaryCode>().unwrap(), code("abba", "b"));
        let (n, swapped) = code("b", "abba").normalized();
        assert!(swapped);
        assert_eq!(n, code("abba", "b"));
        let (n, swapped) = code("ab", "ba").normalized();
        assert!(!swapped);
        assert_eq!(n, code("ab", "ba"));
    }

    #[test]
    fn list_primitivity() {
        let c = code("abba", "b");
        let (x, y) = (w("abba"), w("b"));
        assert!(list_primitive(&[y.clone(), x.clone(), y.clone()], &c).unwrap());
        assert!(!list_primitive(&[x.clone(), y.clone(), x.clone(), y.clone()], &c).unwrap());
        assert!(list_primitive(std::slice::from_ref(&x), &c).unwrap());
        assert_eq!(list_primitive(&[w("a")], &c), Err(Error::AlienLetter));
    }

    #[test]
    fn witnesses() {
        let c = code("abba", "b");
        let (x, y) = (w("abba"), w("b"));
        let status = check_witness(&c, &[y.clone(), x.clone(), y.clone()]).unwrap();
        assert!(status.is_witness);
        let status = check_witness(&c, &[x.clone(), y.clone()]).unwrap();
        assert_eq!(status.reasons, vec![WitnessClause::ConcatPrimitive]);
        let status = check_witness(&c, &[y.clone(), y.clone()]).unwrap();
        assert_eq!(status.reasons, vec![WitnessClause::ListImprimitive]);
        let status = check_witness(&c, std::slice::from_ref(&x)).unwrap();
        assert_eq!(
            status.reasons,
            vec![WitnessClause::TooShort, WitnessClause::ConcatPrimitive]
        );
        assert_eq!(check_witness(&c, &[w("ab")]), Err(Error::AlienLetter));
    }

    #[test]
    fn decisions() {
        let r = decide(&code("abba", "b"));
        assert_eq!(r.to_string(), "NOT_PRESERVING j=1 k=2 z=abb l=2 swapped=0");
        let r = decide(&code("ababa", "baab"));
        assert_eq!((r.exponents, r.z.clone()), (Some((2, 1)), Some(w("ababaab"))));
        let r = decide(&code("a", "b"));
        assert!(r.preserving);
        assert_eq!(r.to_string(), "PRESERVING");
        let r = decide(&code("b", "abba"));
        assert_eq!(r.to_string(), "NOT_PRESERVING j=1 k=2 z=abb l=2 swapped=1");
    }

    #[test]
    fn report_round_trip() {
        for c in [code("abba", "b"), code("a", "b"), code("b", "abba")] {
            let r = decide(&c);
            assert_eq!(r.to_string().parse::<WitnessReport>().unwrap(), r);
        }
        assert!("NOT_PRESERVING j=1".parse::<WitnessReport>().is_err());
    }

    #[test]
    fn theorem1_examples() {
        assert!(verify_theorem1(&code("abba", "b"), 8));
        assert!(verify_theorem1(&code("a", "b"), 8));
        assert!(verify_theorem1(&code("01010", "1001"), 8));
        assert_eq!(verify_theorem1_tally(&code("abba", "b"), 8).checked, 508);
    }

    #[test]
    fn gluing() {
        let (u, v, z) = (w("u"), w("v"), w("z"));
        let ws = [u.clone(), v.clone(), u.clone(), u.clone(), z.clone(), u.clone(), z.clone()];
        assert_eq!(glue(&ws, &u).unwrap().to_string(), "uv.uuz.uz");
        assert_eq!(glue(std::slice::from_ref(&v), &u).unwrap().entries(), std::slice::from_ref(&v));
        assert_eq!(glue(&[u.clone(), u.clone(), v.clone()], &u).unwrap().entries(), [w("uuv")]);
        assert_eq!(glue(&[v.clone(), u.clone()], &u), Err(Error::LastIsChosen));
        assert!(glue(&[], &u).unwrap().is_empty());
    }

    #[test]
    fn root_morphisms() {
        let c = code("abab", "aa");
        let (x, y) = (w("abab"), w("aa"));
        let r = root_morphism(&[x.clone(), y.clone(), x.clone()], &c).unwrap();
        assert_eq!(r.to_string(), "ab.ab.a.a.ab.ab");
        let c = code("ab", "b");
        let ws = [w("ab"), w("b"), w("b")];
        assert_eq!(root_morphism(&ws, &c).unwrap().entries(), ws);
        let c = code("aa", "b");
        assert_eq!(root_morphism(&[w("aa")], &c).unwrap().to_string(), "a.a");
        assert_eq!(root_morphism(&[w("x")], &c), Err(Error::AlienLetter));
    }

    #[test]
    fn rotations() {
        let (x, y) = (w("abba"), w("b"));
        let ws = [y.clone(), x.clone(), y.clone()];
        assert_eq!(list_conjugate(&ws, 1).entries(), [x.clone(), y.clone(), y.clone()]);
        assert_eq!(list_conjugate(&ws, 0).entries(), ws);
        assert_eq!(list_conjugate(&ws, 3).entries(), ws);
        assert!(lists_conjugate(&ws, &[y.clone(), y.clone(), x.clone()]));
        assert!(has_cyclic_square(&ws, &y));
        assert!(!has_cyclic_square(&ws, &x));
    }
}
