//! Interpretations of a word by a set of words.
//!
//! A triple `(p, s, w)` interprets `u` when `w` is a nonempty list over the
//! generating set, `p · u · s = concat w`, `p` is a strict prefix of the first
//! factor and `s` a strict suffix of the last one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, InterpretationClause, Result};
use crate::words::{
    concat, hull_factorize, in_hull, is_strict_prefix, is_strict_suffix, solve_conjugation, Word,
    WordList,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interpretation {
    p: Word,
    s: Word,
    factors: WordList,
    target: Word,
}

impl Interpretation {
    /// Validates the four defining clauses against the interpreted word `u`.
    pub fn new(p: Word, s: Word, factors: WordList, u: Word) -> Result<Self> {
        let (head, last) = match (factors.first(), factors.last()) {
            (Some(h), Some(l)) => (h, l),
            _ => return Err(Error::InvalidInterpretation(InterpretationClause::EmptyFactors)),
        };
        if !is_strict_prefix(&p, head) {
            return Err(Error::InvalidInterpretation(InterpretationClause::PrefixNotStrict));
        }
        if !is_strict_suffix(&s, last) {
            return Err(Error::InvalidInterpretation(InterpretationClause::SuffixNotStrict));
        }
        if concat(&[&p[..], &u[..], &s[..]]) != factors.concat() {
            return Err(Error::InvalidInterpretation(InterpretationClause::ConcatMismatch));
        }
        Ok(Interpretation {
            p,
            s,
            factors,
            target: u,
        })
    }

    pub fn p(&self) -> &Word {
        &self.p
    }

    pub fn s(&self) -> &Word {
        &self.s
    }

    pub fn factors(&self) -> &WordList {
        &self.factors
    }

    /// The interpreted word.
    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn is_trivial(&self) -> bool {
        self.p.is_empty() && self.s.is_empty()
    }
}

pub fn make_interpretation(p: Word, s: Word, factors: WordList, u: Word) -> Result<Interpretation> {
    Interpretation::new(p, s, factors, u)
}

pub fn is_trivial(i: &Interpretation) -> bool {
    i.is_trivial()
}

fn dash(w: &Word) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.to_string()
    }
}

impl fmt::Display for Interpretation {
    /// `p | f1.f2.....fk | s`, the empty word printed as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", dash(&self.p), self.factors, dash(&self.s))
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Interpretation({self})")
    }
}

fn undash(tok: &str) -> Result<Word> {
    if tok == "-" {
        Ok(Word::empty())
    } else {
        tok.parse()
    }
}

impl FromStr for Interpretation {
    type Err = Error;

    /// Parses the line format; the interpreted word is recovered from the
    /// factors by stripping `p` and `s`.
    fn from_str(line: &str) -> Result<Self> {
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        let [p, factors, s] = parts[..] else {
            return Err(Error::Parse(format!("expected `p | factors | s`, got {line:?}")));
        };
        let p = undash(p)?;
        let s = undash(s)?;
        let factors = factors
            .split('.')
            .map(undash)
            .collect::<Result<Vec<_>>>()?;
        let factors = WordList::new(factors);
        let whole = factors.concat();
        if p.len() + s.len() > whole.len() || !whole.starts_with(&p) || !whole.ends_with(&s) {
            return Err(Error::Parse(format!("p and s do not frame the factors in {line:?}")));
        }
        let u = Word::from(&whole[p.len()..whole.len() - s.len()]);
        Interpretation::new(p, s, factors, u)
    }
}

fn generators(gens: &[Word]) -> Result<Vec<Word>> {
    if gens.iter().any(|g| g.is_empty()) {
        return Err(Error::EmptyCodeword);
    }
    Ok(gens.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect())
}

/// All interpretations of `u` over `gens`, ordered by `|p|` and then by the
/// factor list.
pub fn enumerate_interpretations(u: &[u8], gens: &[Word]) -> Result<Vec<Interpretation>> {
    if u.is_empty() {
        return Err(Error::EmptyTarget);
    }
    let gens = generators(gens)?;
    let target = Word::from(u);
    let mut found = Vec::new();

    // factors[..] covers u[..pos] exactly, with the head overhanging by p
    fn extend(
        u: &Word,
        gens: &[Word],
        p: &Word,
        pos: usize,
        factors: &mut Vec<Word>,
        found: &mut Vec<Interpretation>,
    ) {
        let rest = &u[pos..];
        for g in gens {
            factors.push(g.clone());
            if g.len() >= rest.len() {
                if g.starts_with(rest) {
                    let s = Word::from(&g[rest.len()..]);
                    let i = Interpretation::new(p.clone(), s, WordList::new(factors.clone()), u.clone())
                        .expect("enumerated triple satisfies every clause");
                    found.push(i);
                }
            } else if rest.starts_with(g) {
                extend(u, gens, p, pos + g.len(), factors, found);
            }
            factors.pop();
        }
    }

    for head in &gens {
        for off in 0..head.len() {
            let p = Word::from(&head[..off]);
            let tail = &head[off..];
            if tail.len() >= u.len() {
                if tail.starts_with(u) {
                    let s = Word::from(&tail[u.len()..]);
                    let factors = WordList::new(vec![head.clone()]);
                    found.push(Interpretation::new(p, s, factors, target.clone())?);
                }
            } else if u.starts_with(tail) {
                let mut factors = vec![head.clone()];
                extend(&target, &gens, &p, tail.len(), &mut factors, &mut found);
            }
        }
    }

    found.sort_by(|a, b| {
        a.p.len()
            .cmp(&b.p.len())
            .then_with(|| a.factors.cmp(&b.factors))
    });
    Ok(found)
}

/// Disjointness relative to the factorization `u_factorization` of the
/// interpreted word: no prefix of the factors ends where `p` followed by a
/// prefix of the factorization ends.
pub fn is_disjoint(i: &Interpretation, u_factorization: &[Word]) -> Result<bool> {
    if concat(u_factorization) != i.target {
        return Err(Error::FactorizationMismatch);
    }
    // both sides are prefixes of concat(factors), so equal words <=> equal lengths
    let factor_ends: BTreeSet<usize> = prefix_lengths(&i.factors).collect();
    Ok(prefix_lengths(u_factorization).all(|n| !factor_ends.contains(&(i.p.len() + n))))
}

fn prefix_lengths(ws: &[Word]) -> impl Iterator<Item = usize> + '_ {
    std::iter::once(0).chain(ws.iter().scan(0, |acc, w| {
        *acc += w.len();
        Some(*acc)
    }))
}

/// Disjointness with respect to the factorization of the target over `gens`,
/// which is unique when `gens` is a code.
pub fn is_disjoint_over(i: &Interpretation, gens: &[Word]) -> Result<bool> {
    let f = hull_factorize(&i.target, gens)?.ok_or(Error::FactorizationMismatch)?;
    is_disjoint(i, &f)
}

/// `p` is a suffix of some element of the submonoid generated by `gens`.
pub fn is_suffix_extendable(p: &[u8], gens: &[Word]) -> Result<bool> {
    let gens = generators(gens)?;
    for cut in 0..=p.len() {
        let (t, m) = p.split_at(cut);
        if (t.is_empty() || gens.iter().any(|g| g.ends_with(t))) && in_hull(m, &gens)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `s` is a prefix of some element of the submonoid generated by `gens`.
pub fn is_prefix_extendable(s: &[u8], gens: &[Word]) -> Result<bool> {
    let gens = generators(gens)?;
    for cut in 0..=s.len() {
        let (m, t) = s.split_at(cut);
        if (t.is_empty() || gens.iter().any(|g| g.starts_with(t))) && in_hull(m, &gens)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn is_extendable(i: &Interpretation, gens: &[Word]) -> Result<bool> {
    Ok(is_suffix_extendable(&i.p, gens)? && is_prefix_extendable(&i.s, gens)?)
}

fn code_pair(x: &[u8], y: &[u8]) -> Result<[Word; 2]> {
    if [x, y].concat() == [y, x].concat() {
        return Err(Error::NotACode);
    }
    Ok([Word::from(x), Word::from(y)])
}

/// All disjoint (relative to `[x, x]`) extendable `{x, y}`-interpretations of
/// `x · x`. Requires `|y| <= |x|`.
pub fn square_interpretations(x: &[u8], y: &[u8]) -> Result<Vec<Interpretation>> {
    let gens = code_pair(x, y)?;
    if y.len() > x.len() {
        return Err(Error::NotNormalized);
    }
    let square = [x, x].concat();
    let xx = [gens[0].clone(), gens[0].clone()];
    let mut out = Vec::new();
    for i in enumerate_interpretations(&square, &gens)? {
        if is_disjoint(&i, &xx)? && is_extendable(&i, &gens)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// For an interpretation of `x · x` with `p · x = x · s`, the split
/// `p = rq`, `s = qr`, `x = (rq)^k r`.
pub fn square_conjugation(i: &Interpretation, x: &[u8]) -> Result<(Word, Word, usize)> {
    solve_conjugation(&i.p, &i.s, x)
}

/// All nontrivial `{x, y}`-interpretations of `x · y` for `|x| = |y|`.
pub fn uniform_square_check(x: &[u8], y: &[u8]) -> Result<Vec<Interpretation>> {
    let gens = code_pair(x, y)?;
    if x.len() != y.len() {
        return Err(Error::UnequalLengths);
    }
    Ok(enumerate_interpretations(&[x, y].concat(), &gens)?
        .into_iter()
        .filter(|i| !i.is_trivial())
        .collect())
}

/// The interpretation of `concat u_prefix` induced by the shift by `z`, where
/// `z · concat w1 = concat w2 · z` and `z` lies outside the submonoid
/// generated by `gens`.
pub fn shift_interpretation(
    w1: &[Word],
    w2: &[Word],
    z: &[u8],
    u_prefix: &[Word],
    gens: &[Word],
) -> Result<Interpretation> {
    let gens = generators(gens)?;
    if w1.iter().chain(w2).any(|w| !gens.contains(w)) {
        return Err(Error::PreconditionViolated("list entries must be generators"));
    }
    let c1 = concat(w1);
    let c2 = concat(w2);
    if [z, &c1[..]].concat() != [&c2[..], z].concat() {
        return Err(Error::PreconditionViolated("z·concat(w1) differs from concat(w2)·z"));
    }
    if in_hull(z, &gens)? {
        return Err(Error::PreconditionViolated("z lies in the generated submonoid"));
    }
    if u_prefix.is_empty() || u_prefix.len() > w1.len() || u_prefix != &w1[..u_prefix.len()] {
        return Err(Error::PreconditionViolated("u_prefix must be a nonempty prefix of w1"));
    }

    // z = c2^k · z' with z'·c1 = c2·z' and |z'| < |c2|
    let offset = z.len() % c2.len();
    let u = concat(u_prefix);
    let end = offset + u.len();

    let mut factors = Vec::new();
    let mut first_start = None;
    let mut last_start = 0;
    let mut start = 0;
    for f in w2.iter().chain(w2) {
        let stop = start + f.len();
        if stop > offset && start < end {
            first_start.get_or_insert(start);
            last_start = start;
            factors.push(f.clone());
        }
        start = stop;
    }
    let first_start = first_start.expect("u is covered by concat(w2 · w2)");
    let p = Word::from(&factors[0][..offset - first_start]);
    let s = Word::from(&factors[factors.len() - 1][end - last_start..]);
    Interpretation::new(p, s, WordList::new(factors), u)
}
