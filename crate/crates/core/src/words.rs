//! Finite words over a byte alphabet and the elementary algebra on them:
//! powers, prefix/suffix/factor order, primitive roots, conjugacy,
//! commutation, periodic roots and membership in a generated submonoid.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single letter. Any byte works; the text formats use printable ASCII.
pub type Letter = u8;

/// A finite word. The empty word is `Word::default()`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `self · other`
    pub fn join(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.as_bytes().to_vec())
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Letters are printable, non-whitespace ASCII characters.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(c) = s.chars().find(|c| !c.is_ascii_graphic()) {
            return Err(Error::Parse(format!("letter {c:?} is not printable ASCII")));
        }
        Ok(Word::from(s))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", String::from_utf8_lossy(&self.0))
    }
}

/// A list whose entries are words, i.e. a word over an alphabet of words.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordList(Vec<Word>);

impl WordList {
    pub fn new(entries: Vec<Word>) -> Self {
        WordList(entries)
    }

    pub fn entries(&self) -> &[Word] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Word> {
        self.0
    }

    pub fn concat(&self) -> Word {
        concat(&self.0)
    }

    /// Primitivity of the list itself, each entry being one letter.
    pub fn is_primitive(&self) -> bool {
        is_primitive_seq(&self.0)
    }

    pub fn push(&mut self, w: Word) {
        self.0.push(w);
    }
}

impl Deref for WordList {
    type Target = [Word];

    fn deref(&self) -> &[Word] {
        &self.0
    }
}

impl From<Vec<Word>> for WordList {
    fn from(v: Vec<Word>) -> Self {
        WordList(v)
    }
}

impl<'a> From<&[&'a str]> for WordList {
    fn from(v: &[&'a str]) -> Self {
        WordList(v.iter().map(|s| Word::from(*s)).collect())
    }
}

impl FromIterator<Word> for WordList {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        WordList(iter.into_iter().collect())
    }
}

impl IntoIterator for WordList {
    type Item = Word;
    type IntoIter = std::vec::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Display for WordList {
    /// Entries separated by `.`; the empty word prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            if w.is_empty() {
                f.write_str("-")?;
            } else {
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WordList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Primitive root `root` and exponent with `root^exponent` equal to the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub root: Word,
    pub exponent: usize,
}

// ---------------------------------------------------------------------------
// Sequence-generic helpers, shared by words and by lists of words.

/// Classic failure function: `border[i]` is the length of the longest proper
/// border of `s[..=i]`.
pub fn border_table<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut border = vec![0usize; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Length of the primitive root of a nonempty sequence: the shortest period
/// if it divides the length, the whole length otherwise.
pub fn root_length<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let period = n - border_table(s)[n - 1];
    if n.is_multiple_of(period) {
        period
    } else {
        n
    }
}

pub fn is_primitive_seq<T: PartialEq>(s: &[T]) -> bool {
    !s.is_empty() && root_length(s) == s.len()
}

/// Smallest `i` such that rotating `u` left by `i` gives `v`.
pub fn rotation_offset<T: PartialEq>(u: &[T], v: &[T]) -> Option<usize> {
    if u.len() != v.len() {
        return None;
    }
    if u.is_empty() {
        return Some(0);
    }
    (0..u.len()).find(|&i| u[i..] == v[..u.len() - i] && u[..i] == v[u.len() - i..])
}

/// `s[i..] · s[..i]`, with `i` taken modulo the length.
pub fn rotate<T: Clone>(s: &[T], i: usize) -> Vec<T> {
    if s.is_empty() {
        return Vec::new();
    }
    let i = i % s.len();
    s[i..].iter().chain(&s[..i]).cloned().collect()
}

// ---------------------------------------------------------------------------

pub fn concat<W: AsRef<[Letter]>>(ws: &[W]) -> Word {
    let mut out = Vec::with_capacity(ws.iter().map(|w| w.as_ref().len()).sum());
    for w in ws {
        out.extend_from_slice(w.as_ref());
    }
    Word(out)
}

pub fn power(w: &[Letter], n: usize) -> Word {
    Word(w.repeat(n))
}

pub fn is_prefix(u: &[Letter], w: &[Letter]) -> bool {
    w.starts_with(u)
}

pub fn is_strict_prefix(u: &[Letter], w: &[Letter]) -> bool {
    u.len() < w.len() && w.starts_with(u)
}

pub fn is_suffix(u: &[Letter], w: &[Letter]) -> bool {
    w.ends_with(u)
}

pub fn is_strict_suffix(u: &[Letter], w: &[Letter]) -> bool {
    u.len() < w.len() && w.ends_with(u)
}

pub fn is_factor(u: &[Letter], w: &[Letter]) -> bool {
    u.is_empty() || w.windows(u.len()).any(|win| win == u)
}

/// Length of the longest common prefix.
pub fn lcp_len<T: PartialEq>(u: &[T], v: &[T]) -> usize {
    u.iter().zip(v).take_while(|(a, b)| a == b).count()
}

pub fn lcp(u: &[Letter], v: &[Letter]) -> Word {
    Word::from(&u[..lcp_len(u, v)])
}

pub fn primitive_root(w: &[Letter]) -> Result<PrimitiveRoot> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let d = root_length(w);
    Ok(PrimitiveRoot {
        root: Word::from(&w[..d]),
        exponent: w.len() / d,
    })
}

pub fn is_primitive(w: &[Letter]) -> bool {
    is_primitive_seq(w)
}

/// Returns `(r, q)` with `u = r·q` and `v = q·r`, using the smallest
/// rotation index.
pub fn are_conjugate(u: &[Letter], v: &[Letter]) -> Option<(Word, Word)> {
    rotation_offset(u, v).map(|i| (Word::from(&u[..i]), Word::from(&u[i..])))
}

/// Solves `u·z = z·v` as `u = rq`, `v = qr`, `z = (rq)^k r`.
pub fn solve_conjugation(u: &[Letter], v: &[Letter], z: &[Letter]) -> Result<(Word, Word, usize)> {
    if u.is_empty() {
        return Err(Error::PreconditionViolated("u must be nonempty"));
    }
    if u.len() != v.len() || [u, z].concat() != [z, v].concat() {
        return Err(Error::PreconditionViolated("u·z differs from z·v"));
    }
    let k = z.len() / u.len();
    let cut = z.len() % u.len();
    Ok((Word::from(&u[..cut]), Word::from(&u[cut..]), k))
}

/// `Some((t, k, m))` with `t` primitive, `x = t^k`, `y = t^m` iff `xy = yx`.
/// Both words empty gives `(ε, 0, 0)`.
pub fn commutation_root(x: &[Letter], y: &[Letter]) -> Option<(Word, usize, usize)> {
    if [x, y].concat() != [y, x].concat() {
        return None;
    }
    let nonempty = if x.is_empty() { y } else { x };
    if nonempty.is_empty() {
        return Some((Word::empty(), 0, 0));
    }
    let t = Word::from(&nonempty[..root_length(nonempty)]);
    let (k, m) = (x.len() / t.len(), y.len() / t.len());
    Some((t, k, m))
}

/// `w ≤p r·w`, i.e. `w` is a prefix of `r^ω`.
pub fn has_periodic_root(w: &[Letter], r: &[Letter]) -> Result<bool> {
    if r.is_empty() {
        return Err(Error::EmptyRoot);
    }
    Ok(w.iter().enumerate().all(|(i, &c)| c == r[i % r.len()]))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether the periodicity lemma applies to `w` with periodic roots `u` and
/// `v`. When it does, `uv = vu`.
pub fn periodicity_forces_commute(u: &[Letter], v: &[Letter], w: &[Letter]) -> Result<bool> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyRoot);
    }
    let long_enough = u.len() + v.len() - gcd(u.len(), v.len()) <= w.len();
    Ok(long_enough && has_periodic_root(w, u)? && has_periodic_root(w, v)?)
}

/// `u` is a factor of some conjugate of `w`.
pub fn is_cyclic_factor(u: &[Letter], w: &[Letter]) -> bool {
    if u.len() > w.len() {
        return false;
    }
    is_factor(u, &[w, w].concat())
}

/// `xy ∧p yx`, the decoding delay word of a non-commuting pair.
pub fn alpha(x: &[Letter], y: &[Letter]) -> Result<Word> {
    let xy = [x, y].concat();
    let yx = [y, x].concat();
    if xy == yx {
        return Err(Error::CommutingPair);
    }
    Ok(lcp(&xy, &yx))
}

/// Factorizes `w` over the generators `gens`, or `None` if `w` is not in the
/// generated submonoid. Among several factorizations, the one taking the
/// longest generator at each step is returned.
pub fn hull_factorize(w: &[Letter], gens: &[Word]) -> Result<Option<WordList>> {
    if gens.iter().any(|g| g.is_empty()) {
        return Err(Error::EmptyCodeword);
    }
    let mut gens: Vec<&Word> = gens.iter().collect();
    gens.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    gens.dedup();

    // reach[i]: the suffix w[i..] factorizes
    let n = w.len();
    let mut reach = vec![false; n + 1];
    reach[n] = true;
    for i in (0..n).rev() {
        reach[i] = gens
            .iter()
            .any(|g| w[i..].starts_with(g) && reach[i + g.len()]);
    }
    if !reach[0] {
        return Ok(None);
    }

    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let g = gens
            .iter()
            .find(|g| w[i..].starts_with(g) && reach[i + g.len()])
            .expect("reachable position has a factor");
        out.push((*g).clone());
        i += g.len();
    }
    Ok(Some(WordList(out)))
}

pub fn in_hull(w: &[Letter], gens: &[Word]) -> Result<bool> {
    Ok(hull_factorize(w, gens)?.is_some())
}
