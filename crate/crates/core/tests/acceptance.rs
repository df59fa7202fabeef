//! Acceptance criteria, run at their full bounds. Prints one line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use binprim::interpretations::square_interpretations;
use binprim::oracle::{enum_codes, EnumConfig};
use binprim::primpres::{check_witness, decide, verify_theorem1};
use binprim::verify::{self, Bounds, Suite};
use binprim::words::primitive_root;
use binprim::{BinaryCode, Tally, Word, WordList};

struct Criterion {
    name: &'static str,
    limit: Duration,
    check: fn() -> (bool, String),
}

fn w(s: &str) -> Word {
    Word::from(s)
}

fn tally_line(t: Tally) -> (bool, String) {
    (t.passed() && t.checked > 0, t.to_string())
}

fn intro_example() -> (bool, String) {
    let code = BinaryCode::new(w("abba"), w("b")).unwrap();
    let ws = WordList::from(&["b", "abba", "b"][..]);
    let status = check_witness(&code, &ws).unwrap();
    let root = primitive_root(&ws.concat()).unwrap();
    let report = decide(&code);
    let ok = status.is_witness
        && ws.concat() == w("babbab")
        && (root.root.clone(), root.exponent) == (w("bab"), 2)
        && report.exponents == Some((1, 2))
        && report.z == Some(w("abb"))
        && report.ell == Some(2);
    (ok, format!("root={} exp={} report=\"{report}\"", root.root, root.exponent))
}

fn square_example() -> (bool, String) {
    let (x, y) = (w("01010"), w("1001"));
    let found = square_interpretations(&x, &y).unwrap();
    let ok = match found.as_slice() {
        [i] => {
            i.p() == &w("01")
                && i.s() == &w("10")
                && i.factors().entries() == [x.clone(), y.clone(), x.clone()]
                && i.s().join(i.p()) == y
                && i.p().join(&x) == w("0101010")
                && x.join(i.s()) == w("0101010")
        }
        _ => false,
    };
    let lines: Vec<String> = found.iter().map(ToString::to_string).collect();
    (ok, format!("found=[{}]", lines.join("; ")))
}

fn bounds(max_len: usize, max_list: usize, max_exp: usize) -> Bounds {
    Bounds { max_len, max_list, max_exp, code: None }
}

fn ls_round_trip() -> (bool, String) {
    tally_line(verify::run(Suite::Theorem32, &bounds(6, 0, 4)))
}

fn ls_uniqueness() -> (bool, String) {
    tally_line(verify::run(Suite::LsUnique, &bounds(6, 0, 5)))
}

fn lyndon_schutzenberger() -> (bool, String) {
    tally_line(verify::run(Suite::LsTheorem, &bounds(5, 0, 4)))
}

fn witness_equivalence() -> (bool, String) {
    let sweep = verify::witness_sweep(5, 8);
    let mut direct = Tally::default();
    for code in enum_codes(&EnumConfig::binary(5)) {
        if !decide(&code).preserving {
            direct.record(verify_theorem1(&code, 8));
        }
    }
    let ok = sweep.equivalence.passed()
        && sweep.moreover.passed()
        && direct.passed()
        && direct.checked == sweep.non_preserving
        && sweep.non_preserving > 0;
    let detail = format!(
        "lists {} moreover {} non-preserving codes {}",
        sweep.equivalence, sweep.moreover, direct
    );
    (ok, detail)
}

fn longer_word_twice() -> (bool, String) {
    let sweep = verify::witness_sweep(5, 8);
    let ok = sweep.longer_twice.passed()
        && sweep.longer_twice.checked > 0
        && sweep.both_squares.passed();
    (ok, format!("xxy {} both-squares {}", sweep.longer_twice, sweep.both_squares))
}

fn property_suites() -> (bool, String) {
    let runs = [
        (Suite::Periodicity, bounds(12, 0, 0)),
        (Suite::Conjugation, bounds(6, 0, 0)),
        (Suite::ExtSufComm, bounds(5, 0, 0)),
        (Suite::Lcp, bounds(3, 4, 0)),
        (Suite::Gluing, bounds(4, 8, 0)),
        (Suite::RootMorphism, bounds(5, 8, 0)),
        (Suite::Interpretations, bounds(8, 0, 0)),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (suite, b) in runs {
        let start = Instant::now();
        let t = verify::run(suite, &b);
        let fast = start.elapsed() <= Duration::from_secs(120);
        ok &= t.passed() && t.checked > 0 && fast;
        parts.push(format!("{suite}: {t}"));
    }
    (ok, parts.join(", "))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "intro example", limit: Duration::from_secs(1), check: intro_example },
        Criterion { name: "square interpretation", limit: Duration::from_secs(1), check: square_example },
        Criterion { name: "family round trip", limit: Duration::from_secs(300), check: ls_round_trip },
        Criterion { name: "exponent uniqueness", limit: Duration::from_secs(300), check: ls_uniqueness },
        Criterion { name: "lyndon-schutzenberger", limit: Duration::from_secs(120), check: lyndon_schutzenberger },
        Criterion { name: "witness equivalence", limit: Duration::from_secs(600), check: witness_equivalence },
        Criterion { name: "longer word twice", limit: Duration::from_secs(600), check: longer_word_twice },
        Criterion { name: "property suites", limit: Duration::from_secs(14 * 60), check: property_suites },
    ];
    let mut failed = 0;
    for (n, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = (c.check)();
        let elapsed = start.elapsed();
        let ok = ok && elapsed <= c.limit;
        failed += usize::from(!ok);
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {} {verdict} {} ({elapsed:.2?}) {detail}", n + 1, c.name);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
