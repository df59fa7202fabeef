// Deciding whether a binary code preserves primitivity.

use binprim::primpres::{check_witness, decide};
use binprim::{BinaryCode, WitnessReport, WordList};

fn main() {
    for (x, y) in [("abba", "b"), ("a", "b"), ("ababa", "baab"), ("b", "abba")] {
        let code = BinaryCode::new(x.into(), y.into()).expect("a code");
        let report = decide(&code);
        println!("{{{x},{y}}}: {report}");
        assert_eq!(report.to_string().parse::<WitnessReport>().unwrap(), report);
    }

    let code = BinaryCode::new("abba".into(), "b".into()).unwrap();
    for list in [&["b", "abba", "b"][..], &["abba", "b"][..], &["abba", "abba"][..]] {
        let ws = WordList::from(list);
        let status = check_witness(&code, &ws).unwrap();
        println!("{ws} -> {} witness={} {:?}", ws.concat(), status.is_witness, status.reasons);
    }
}
