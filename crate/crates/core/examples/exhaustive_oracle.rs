// Brute-force enumeration and the exhaustive suites built on it.

use binprim::oracle::{brute_witnesses, enum_codes, EnumConfig};
use binprim::primpres::decide;
use binprim::verify::{run, Suite};

fn main() {
    let codes = enum_codes(&EnumConfig::binary(4));
    let bad: Vec<_> = codes.iter().filter(|c| !decide(c).preserving).collect();
    println!("{} binary codes up to length 4, {} not primitivity preserving", codes.len(), bad.len());
    for code in bad.iter().take(5) {
        let witnesses = brute_witnesses(code, 6);
        let first = witnesses.first().map(ToString::to_string).unwrap_or_default();
        println!("  {code}: {} witnesses up to length 6, first {first}", witnesses.len());
    }

    for suite in [Suite::Periodicity, Suite::Conjugation, Suite::LsUnique] {
        let mut bounds = suite.default_bounds();
        bounds.max_len = bounds.max_len.min(5);
        println!("{suite}: {}", run(suite, &bounds));
    }
}
