// Primitive roots, conjugacy and the conjugation equation.

use binprim::words::{are_conjugate, commutation_root, primitive_root, solve_conjugation};
use binprim::Word;

fn main() {
    for s in ["babbab", "abaaba", "aaaa", "abc"] {
        let root = primitive_root(&Word::from(s)).expect("nonempty");
        println!("{s}: root={} exp={}", root.root, root.exponent);
    }

    let (u, v) = (Word::from("abaab"), Word::from("ababa"));
    if let Some((r, q)) = are_conjugate(&u, &v) {
        println!("{u} = {r}.{q} and {v} = {q}.{r}");
    }

    // u z = z v
    let (r, q, k) = solve_conjugation(b"aba", b"aab", b"abaab").expect("a solution");
    println!("aba.z = z.aab with z = abaab: r={r} q={q} k={k}");

    if let Some((t, m, n)) = commutation_root(b"abab", b"ab") {
        println!("abab and ab commute: root {t}, exponents {m} and {n}");
    }
}
