//! Exhaustive verification suites. Each one sweeps a bounded space of words,
//! codes or lists and counts the instances checked and the failures.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interpretations::{enumerate_interpretations, square_interpretations, uniform_square_check};
use crate::ls_equation::{
    classify_any, imprim_ext_suf_commutes, instantiate_family, ls_check, mirror_solution,
    unique_exponents, LsFamily,
};
use crate::oracle::{
    brute_family_matches, brute_interpretations, brute_ls_solutions, brute_witnesses, enum_codes,
    enum_words, naive_conjugate, naive_is_primitive, tag_sequences, EnumConfig,
};
use crate::primpres::{
    candidate_exponents, check_witness, decide, glue, has_cyclic_square, lists_conjugate,
    root_morphism, BinaryCode, Tally,
};
use crate::words::{
    alpha, concat, is_primitive, lcp, lcp_len, periodicity_forces_commute,
    solve_conjugation, Word, WordList,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Theorem32,
    LsUnique,
    SquareInterp,
    Gluing,
    Periodicity,
    Lcp,
    LsTheorem,
    Conjugation,
    ExtSufComm,
    RootMorphism,
    Interpretations,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Theorem1,
        Suite::Theorem32,
        Suite::LsUnique,
        Suite::SquareInterp,
        Suite::Gluing,
        Suite::Periodicity,
        Suite::Lcp,
        Suite::LsTheorem,
        Suite::Conjugation,
        Suite::ExtSufComm,
        Suite::RootMorphism,
        Suite::Interpretations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem32 => "theorem32",
            Suite::LsUnique => "ls-unique",
            Suite::SquareInterp => "square-interp",
            Suite::Gluing => "gluing",
            Suite::Periodicity => "periodicity",
            Suite::Lcp => "lcp",
            Suite::LsTheorem => "ls-theorem",
            Suite::Conjugation => "conjugation",
            Suite::ExtSufComm => "ext-suf-comm",
            Suite::RootMorphism => "root-morphism",
            Suite::Interpretations => "interpretations",
        }
    }

    /// Desk-scale bounds for the suite.
    pub fn default_bounds(self) -> Bounds {
        let b = |max_len, max_list, max_exp| Bounds { max_len, max_list, max_exp, code: None };
        match self {
            Suite::Theorem1 => b(5, 8, 0),
            Suite::Theorem32 => b(6, 0, 4),
            Suite::LsUnique => b(6, 0, 5),
            Suite::SquareInterp => b(6, 6, 0),
            Suite::Gluing => b(2, 8, 0),
            Suite::Periodicity => b(12, 0, 0),
            Suite::Lcp => b(3, 4, 0),
            Suite::LsTheorem => b(5, 0, 4),
            Suite::Conjugation => b(6, 0, 0),
            Suite::ExtSufComm => b(5, 0, 0),
            Suite::RootMorphism => b(5, 6, 0),
            Suite::Interpretations => b(8, 0, 0),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Sweep bounds. Which fields matter depends on the suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Longest word enumerated.
    pub max_len: usize,
    /// Longest list enumerated.
    pub max_list: usize,
    /// Largest exponent enumerated.
    pub max_exp: usize,
    /// Restrict a code sweep to this single code.
    pub code: Option<BinaryCode>,
}

pub fn run(suite: Suite, bounds: &Bounds) -> Tally {
    match suite {
        Suite::Theorem1 => match &bounds.code {
            Some(code) => witness_equivalence_for(code, bounds.max_list),
            None => {
                let s = witness_sweep(bounds.max_len, bounds.max_list);
                s.equivalence.merge(s.moreover).merge(s.longer_twice).merge(s.both_squares)
            }
        },
        Suite::Theorem32 => {
            ls_classification(bounds.max_len, bounds.max_exp)
                .merge(ls_family_soundness(3, 4))
        }
        Suite::LsUnique => ls_uniqueness(bounds.max_len, bounds.max_exp),
        Suite::SquareInterp => {
            let s = square_interp_sweep(bounds.max_len, bounds.max_len.min(5), bounds.max_list);
            s.square_shape.merge(s.uniform).merge(s.not_conjugate)
        }
        Suite::Gluing => gluing(bounds.max_len, bounds.max_list),
        Suite::Periodicity => periodicity(bounds.max_len),
        Suite::Lcp => lcp_lemma(bounds.max_len, bounds.max_list),
        Suite::LsTheorem => ls_theorem(bounds.max_len, bounds.max_exp),
        Suite::Conjugation => conjugation(bounds.max_len),
        Suite::ExtSufComm => ext_suf_comm(bounds.max_len),
        Suite::RootMorphism => root_morphism_invariants(bounds.max_len, bounds.max_list),
        Suite::Interpretations => interpretation_enumeration(bounds.max_len, 4),
    }
}

fn sum(tallies: impl ParallelIterator<Item = Tally>) -> Tally {
    tallies.reduce(Tally::default, Tally::merge)
}

fn binary_words(max_len: usize) -> Vec<Word> {
    enum_words(&EnumConfig::binary(max_len))
}

fn binary_codes(max_len: usize) -> Vec<BinaryCode> {
    enum_codes(&EnumConfig::binary(max_len))
}

fn commute(a: &[u8], b: &[u8]) -> bool {
    [a, b].concat() == [b, a].concat()
}

/// For one code: every list of length `2..=max_list` is a witness (by the
/// fast check and by the definition) exactly when it is a list conjugate of
/// `[x]^j [y]^k` for the exponents `decide` reports.
pub fn witness_equivalence_for(code: &BinaryCode, max_list: usize) -> Tally {
    let report = decide(code);
    let (norm, _) = code.normalized();
    let shape = report.exponents.map(|(j, k)| norm.block_list(j, k));
    let mut tally = Tally::default();
    for len in 2..=max_list {
        for tags in tag_sequences(len) {
            let ws = code.list_from_tags(&tags);
            let fast = check_witness(code, &ws).expect("list drawn from the code").is_witness;
            let naive = naive_is_primitive(&tags) && !naive_is_primitive(&ws.concat());
            let predicted = shape.as_ref().is_some_and(|s| lists_conjugate(&ws, s));
            tally.record(fast == predicted && naive == predicted);
        }
    }
    tally
}

#[derive(Debug, Clone, Copy, Default)]
pub struct WitnessSweep {
    /// Witness iff conjugate of `[x]^j [y]^k`, per list.
    pub equivalence: Tally,
    /// Exponent and primitivity constraints, per non-preserving code.
    pub moreover: Tally,
    /// Witnesses containing the longer word twice are conjugates of
    /// `[x, x, y]` and both words are primitive, per such witness.
    pub longer_twice: Tally,
    /// No witness has both `[x, x]` and `[y, y]` as cyclic factors, per witness.
    pub both_squares: Tally,
    /// Codes found not primitivity preserving.
    pub non_preserving: usize,
}

impl WitnessSweep {
    fn merge(self, o: WitnessSweep) -> WitnessSweep {
        WitnessSweep {
            equivalence: self.equivalence.merge(o.equivalence),
            moreover: self.moreover.merge(o.moreover),
            longer_twice: self.longer_twice.merge(o.longer_twice),
            both_squares: self.both_squares.merge(o.both_squares),
            non_preserving: self.non_preserving + o.non_preserving,
        }
    }
}

/// Every binary code with words up to `max_len`, lists up to `max_list`.
pub fn witness_sweep(max_len: usize, max_list: usize) -> WitnessSweep {
    binary_codes(max_len)
        .par_iter()
        .map(|code| {
            let mut out = WitnessSweep {
                equivalence: witness_equivalence_for(code, max_list),
                ..Default::default()
            };
            let (norm, _) = code.normalized();
            let (x, y) = (norm.x(), norm.y());
            let report = decide(code);
            if let Some((j, k)) = report.exponents {
                out.non_preserving = 1;
                let mut ok = j == 1 || (j, k) == (2, 1);
                if j >= 2 {
                    ok &= (j, k) == (2, 1) && is_primitive(x) && is_primitive(y);
                }
                if k >= 2 {
                    ok &= j == 1 && is_primitive(x);
                }
                out.moreover.record(ok);
            }
            let xxy = norm.block_list(2, 1);
            for ws in brute_witnesses(&norm, max_list) {
                if ws.iter().filter(|w| *w == x).count() >= 2 {
                    out.longer_twice
                        .record(naive_conjugate(&ws, &xxy) && is_primitive(x) && is_primitive(y));
                }
                out.both_squares
                    .record(!(has_cyclic_square(&ws, x) && has_cyclic_square(&ws, y)));
            }
            out
        })
        .reduce(WitnessSweep::default, WitnessSweep::merge)
}

/// Every imprimitive `x^j y^k` (found by brute force) classifies into exactly
/// one family, and the family reproduces the solution.
pub fn ls_classification(max_len: usize, max_exp: usize) -> Tally {
    let sols = brute_ls_solutions(&EnumConfig::binary(max_len), max_exp);
    sum(sols.par_iter().map(|s| {
        let mut t = Tally::default();
        let ok = match classify_any(s) {
            Ok((family, mirrored)) => {
                let normal = if mirrored { mirror_solution(s) } else { s.clone() };
                let back = instantiate_family(&family, normal.j(), normal.k(), normal.ell());
                let back = back.map(|b| if mirrored { mirror_solution(&b) } else { b });
                back.as_ref() == Ok(s) && brute_family_matches(&normal) == [family.tag()]
            }
            Err(_) => false,
        };
        t.record(ok);
        t
    }))
}

/// Every parameter tuple satisfying a family's side conditions, with
/// `|r|, |q| <= max_word` and parameters up to `max_param`, instantiates to a
/// solution whose product `ls_check` also finds imprimitive.
pub fn ls_family_soundness(max_word: usize, max_param: usize) -> Tally {
    let words = binary_words(max_word);
    let mut jobs: Vec<(LsFamily, usize, usize, usize)> = Vec::new();
    let params = 0..=max_param;
    let big = 2..=max_param.max(2);
    for r in &words {
        for m in 1..=max_param {
            for n in 1..=max_param {
                for t in 1..=max_param {
                    for j in 1..=max_param {
                        for k in 1..=max_param {
                            for ell in big.clone() {
                                if m * j + n * k == t * ell {
                                    jobs.push((LsFamily::A { r: r.clone(), m, n, t }, j, k, ell));
                                }
                            }
                        }
                    }
                }
            }
        }
        for q in &words {
            if commute(r, q) {
                continue;
            }
            let (r, q) = (r.clone(), q.clone());
            for m in params.clone() {
                for n in params.clone() {
                    if m + n >= 1 {
                        jobs.push((LsFamily::B { r: r.clone(), q: q.clone(), m, n }, 1, 1, m + n + 1));
                    }
                }
            }
            for m in 2..=max_param {
                jobs.push((LsFamily::C { r: r.clone(), q: q.clone(), m }, 2, 1, 2));
            }
            for k in big.clone() {
                for ell in big.clone() {
                    jobs.push((LsFamily::D { r: r.clone(), q: q.clone(), k, ell }, 1, k, ell));
                    for m in 1..=max_param {
                        jobs.push((LsFamily::E { r: r.clone(), q: q.clone(), m, k, ell }, 1, k, ell));
                    }
                }
            }
        }
    }
    sum(jobs.par_iter().map(|(f, j, k, ell)| {
        let mut t = Tally::default();
        let ok = instantiate_family(f, *j, *k, *ell).is_ok_and(|s| {
            ls_check(s.x(), s.y(), s.j(), s.k()).is_ok_and(|found| found.is_some())
        });
        t.record(ok);
        t
    }))
}

/// At most one imprimitive `(j, k)` per code, it lies among the decision
/// procedure's candidates, and `decide` reports it.
pub fn ls_uniqueness(max_len: usize, max_exp: usize) -> Tally {
    sum(binary_codes(max_len).par_iter().map(|code| {
        let mut t = Tally::default();
        let hits = unique_exponents(code.x(), code.y(), max_exp, max_exp).expect("a code");
        let candidates = candidate_exponents(code);
        let report = decide(code);
        let ok = hits.len() <= 1
            && hits.iter().all(|h| candidates.contains(h))
            && match hits.iter().next() {
                Some(&h) => report.exponents == Some(h),
                None => report.preserving || report.exponents.is_some_and(|(j, k)| j > max_exp || k > max_exp),
            };
        t.record(ok);
        t
    }))
}

/// No `x^j y^k = z^l` with `j, k, l` in `2..=max_exp` and `xy != yx`.
pub fn ls_theorem(max_len: usize, max_exp: usize) -> Tally {
    let words = binary_words(max_len);
    sum(words.par_iter().map(|x| {
        let mut t = Tally::default();
        for y in &words {
            for j in 2..=max_exp {
                for k in 2..=max_exp {
                    let product = [x.repeat(j), y.repeat(k)].concat();
                    for ell in 2..=max_exp {
                        if product.len() % ell != 0 {
                            continue;
                        }
                        let z = &product[..product.len() / ell];
                        if z.repeat(ell) == product {
                            t.record(commute(x, y) && commute(x, z) && commute(y, z));
                        }
                    }
                }
            }
        }
        t
    }))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SquareInterpSweep {
    /// Disjoint extendable interpretations of `x·x`, per qualifying code.
    pub square_shape: Tally,
    /// Nontrivial interpretations of `x·y` with `|x| = |y|`, per code.
    pub uniform: Tally,
    /// Equal-length conjugate codes have no witness, per code.
    pub not_conjugate: Tally,
}

/// The square interpretation shape over codes with `|y| <= |x| <= max_len`
/// (both words primitive and not conjugate), the equal-length lemma up to
/// `uniform_len`, and conjugate equal-length codes preserving primitivity on
/// lists up to `max_list`.
pub fn square_interp_sweep(max_len: usize, uniform_len: usize, max_list: usize) -> SquareInterpSweep {
    let words = binary_words(max_len);
    let pairs: Vec<(&Word, &Word)> = words
        .iter()
        .flat_map(|x| words.iter().map(move |y| (x, y)))
        .filter(|(x, y)| y.len() <= x.len() && !commute(x, y))
        .collect();
    pairs
        .par_iter()
        .map(|&(x, y)| {
            let mut out = SquareInterpSweep::default();
            if is_primitive(x) && is_primitive(y) && !naive_conjugate(x, y) {
                let found = square_interpretations(x, y).expect("a normalized code");
                let xyx = [x.clone(), y.clone(), x.clone()];
                let ok = found.len() <= 1
                    && found.iter().all(|i| {
                        i.factors().entries() == xyx
                            && i.s().join(i.p()) == *y
                            && i.p().join(x) == x.join(i.s())
                    });
                out.square_shape.record(ok);
            }
            if x.len() == y.len() && x.len() <= uniform_len {
                let found = uniform_square_check(x, y).expect("an equal-length code");
                let (xyx, yxy) = ([x.clone(), y.clone(), x.clone()], [y.clone(), x.clone(), y.clone()]);
                let ok = found.iter().all(|i| i.factors().entries() == xyx || i.factors().entries() == yxy)
                    && (found.is_empty() || !is_primitive(&x.join(y)));
                out.uniform.record(ok);
                if naive_conjugate(x, y) {
                    let code = BinaryCode::new(x.clone(), y.clone()).expect("a code");
                    out.not_conjugate.record(brute_witnesses(&code, max_list).is_empty());
                }
            }
            out
        })
        .reduce(SquareInterpSweep::default, |a, b| SquareInterpSweep {
            square_shape: a.square_shape.merge(b.square_shape),
            uniform: a.uniform.merge(b.uniform),
            not_conjugate: a.not_conjugate.merge(b.not_conjugate),
        })
}

/// Gluing over codes with words up to `max_len` and lists up to `max_list`:
/// concatenation is kept, glued entries are `chosen^i · v`, and without the
/// square `[chosen, chosen]` list primitivity is kept both ways. Also checks
/// that `{c·o, o}` is a code iff `{c, o}` is, for words up to `max_len + 1`.
pub fn gluing(max_len: usize, max_list: usize) -> Tally {
    let mut tally = Tally::default();
    for code in binary_codes(max_len) {
        for (chosen, other) in [(code.x(), code.y()), (code.y(), code.x())] {
            let glued_letter = chosen.join(other);
            for len in 1..=max_list {
                for tags in tag_sequences(len) {
                    let ws = code.list_from_tags(&tags);
                    if ws.last() == Some(chosen) {
                        continue;
                    }
                    let glued = glue(&ws, chosen).expect("last entry is not the chosen word");
                    let mut ok = glued.concat() == ws.concat();
                    ok &= glued.iter().all(|g| {
                        let runs = (g.len() - other.len()) / chosen.len();
                        g.ends_with(other) && g[..g.len() - other.len()] == chosen.repeat(runs)[..]
                    });
                    let square = ws.windows(2).any(|p| p[0] == *chosen && p[1] == *chosen);
                    if !square {
                        ok &= glued.iter().all(|g| *g == glued_letter || g == other);
                        ok &= naive_is_primitive(&glued) == naive_is_primitive(&ws);
                    }
                    tally.record(ok);
                }
            }
        }
    }
    let words = binary_words(max_len + 1);
    for c in &words {
        for o in &words {
            let glued = c.join(o);
            tally.record(commute(&glued, o) == commute(c, o));
        }
    }
    tally
}

/// Periodicity lemma for every binary word up to `max_len`: whenever the
/// hypothesis holds the two roots commute. The hypothesis forces both roots
/// to be prefixes of `w`, so those are the roots enumerated. The fast
/// predicate is compared with a direct transcription.
pub fn periodicity(max_len: usize) -> Tally {
    sum(binary_words(max_len).par_iter().map(|w| {
        let mut t = Tally::default();
        for a in 1..=w.len() {
            for b in 1..=w.len() {
                let (u, v) = (&w[..a], &w[..b]);
                let fast = periodicity_forces_commute(u, v, w).expect("nonempty roots");
                let direct = w.len() + gcd(a, b) >= a + b
                    && [u, w].concat().starts_with(w)
                    && [v, w].concat().starts_with(w);
                t.record(fast == direct && (!fast || commute(u, v)));
            }
        }
        t
    }))
}

fn gcd(a: usize, b: usize) -> usize {
    (1..=a.min(b)).rev().find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d)).unwrap_or(a.max(b))
}

/// Conjugation equation solver on `|u|, |z| <= max_len`: solutions of
/// `uz = zv` reconstruct, non-solutions are rejected.
pub fn conjugation(max_len: usize) -> Tally {
    let words = binary_words(max_len);
    let mut zs = vec![Word::empty()];
    zs.extend(words.iter().cloned());
    sum(words.par_iter().map(|u| {
        let mut t = Tally::default();
        let vs: Vec<&Word> = words.iter().filter(|v| v.len() == u.len()).collect();
        for z in &zs {
            for v in &vs {
                let holds = u.join(z) == z.join(v);
                let ok = match solve_conjugation(u, v, z) {
                    Ok((r, q, k)) => {
                        holds
                            && r.join(&q) == *u
                            && q.join(&r) == **v
                            && concat(&[r.join(&q).repeat(k), r.to_vec()]) == *z
                    }
                    Err(_) => !holds,
                };
                t.record(ok);
            }
        }
        t
    }))
}

/// `uv` and `uvv` both imprimitive forces `uv = vu`, for `|u|, |v| <= max_len`.
pub fn ext_suf_comm(max_len: usize) -> Tally {
    let words = binary_words(max_len);
    let mut t = Tally::default();
    for u in &words {
        for v in &words {
            let fast = imprim_ext_suf_commutes(u, v).expect("nonempty words");
            let naive = !naive_is_primitive(&u.join(v)) && !naive_is_primitive(&u.join(&v.join(v)));
            t.record(fast == naive && (!fast || commute(u, v)));
        }
    }
    t
}

/// For binary codes `{u0, u1}` with words up to `max_len` and lists `z0`, `z1`
/// up to `max_list` whose concatenations are not prefix-comparable:
/// `concat z0 ∧ concat z1 = concat (z0 ∧ z1) · α(u0, u1)`.
pub fn lcp_lemma(max_len: usize, max_list: usize) -> Tally {
    let words = binary_words(max_len);
    let lists: Vec<Vec<bool>> = (0..=max_list).flat_map(tag_sequences).collect();
    let mut tally = Tally::default();
    for u0 in &words {
        for u1 in &words {
            if commute(u0, u1) {
                continue;
            }
            let a = alpha(u0, u1).expect("non-commuting");
            let spell = |tags: &[bool]| -> WordList {
                tags.iter().map(|&b| if b { u1.clone() } else { u0.clone() }).collect()
            };
            for t0 in &lists {
                let (z0, c0) = (spell(t0), spell(t0).concat());
                for t1 in &lists {
                    let c1 = spell(t1).concat();
                    if c0.starts_with(&c1) || c1.starts_with(&c0) {
                        continue;
                    }
                    let common = &z0[..lcp_len(t0, t1)];
                    tally.record(lcp(&c0, &c1) == concat(common).join(&a));
                }
            }
        }
    }
    tally
}

/// Root morphism over codes with words up to `max_len`, lists up to
/// `max_list`: concatenation is kept, primitive lists of length at least two
/// map to primitive lists, cyclic squares are transported.
pub fn root_morphism_invariants(max_len: usize, max_list: usize) -> Tally {
    sum(binary_codes(max_len).par_iter().map(|code| {
        let mut t = Tally::default();
        let rx = Word::from(&code.x()[..crate::oracle::naive_root_len(code.x())]);
        let ry = Word::from(&code.y()[..crate::oracle::naive_root_len(code.y())]);
        for len in 1..=max_list {
            for tags in tag_sequences(len) {
                let ws = code.list_from_tags(&tags);
                let image = root_morphism(&ws, code).expect("list drawn from the code");
                let mut ok = image.concat() == ws.concat();
                ok &= image.iter().all(|w| *w == rx || *w == ry);
                if len >= 2 && naive_is_primitive(&tags) {
                    ok &= naive_is_primitive(&image);
                }
                for (c, rc) in [(code.x(), &rx), (code.y(), &ry)] {
                    if has_cyclic_square(&ws, c) {
                        ok &= has_cyclic_square(&image, rc);
                    }
                }
                t.record(ok);
            }
        }
        t
    }))
}

/// Fast enumeration equals the cut-position oracle for every binary `u` up
/// to `max_len` and every generating set of one or two words up to
/// `max_gen`.
pub fn interpretation_enumeration(max_len: usize, max_gen: usize) -> Tally {
    let gens = binary_words(max_gen);
    let mut sets: Vec<Vec<Word>> = gens.iter().map(|g| vec![g.clone()]).collect();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            sets.push(vec![a.clone(), b.clone()]);
        }
    }
    let targets = binary_words(max_len);
    sum(targets.par_iter().map(|u| {
        let mut t = Tally::default();
        for set in &sets {
            let fast = enumerate_interpretations(u, set).expect("valid inputs");
            t.record(fast == brute_interpretations(u, set));
        }
        t
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nosuch".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        let b = |max_len, max_list, max_exp| Bounds { max_len, max_list, max_exp, code: None };
        assert!(run(Suite::Theorem1, &b(3, 6, 0)).passed());
        assert!(run(Suite::Theorem32, &b(3, 0, 3)).passed());
        assert!(run(Suite::LsUnique, &b(4, 0, 4)).passed());
        assert!(run(Suite::Periodicity, &b(6, 0, 0)).passed());
        assert!(run(Suite::Interpretations, &b(4, 0, 0)).passed());
    }

    #[test]
    fn single_code_count() {
        let code: BinaryCode = "abba,b".parse().unwrap();
        let bounds = Bounds { max_len: 0, max_list: 8, max_exp: 0, code: Some(code) };
        let t = run(Suite::Theorem1, &bounds);
        assert_eq!((t.checked, t.failures), (508, 0));
    }
}
