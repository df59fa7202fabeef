// Interpretations of a word by a set of words, and of a square x.x by {x, y}.

use binprim::interpretations::{
    enumerate_interpretations, is_disjoint_over, is_extendable, shift_interpretation,
    square_conjugation, square_interpretations,
};
use binprim::Word;

fn main() {
    let (x, y) = (Word::from("01010"), Word::from("1001"));
    for i in square_interpretations(&x, &y).unwrap() {
        let (r, q, k) = square_conjugation(&i, &x).unwrap();
        println!("{i}   p.x = x.s with r={r} q={q} k={k}");
    }

    let gens = [Word::from("ab"), Word::from("ba")];
    let u = Word::from("abab");
    for i in enumerate_interpretations(&u, &gens).unwrap() {
        println!(
            "{i}  disjoint={} extendable={}",
            is_disjoint_over(&i, &gens).unwrap(),
            is_extendable(&i, &gens).unwrap()
        );
    }

    // z.concat(w) = concat(w).z for w = [abba, b, b] and z = abb
    let gens = [Word::from("abba"), Word::from("b")];
    let w = [gens[0].clone(), gens[1].clone(), gens[1].clone()];
    let i = shift_interpretation(&w, &w, b"abb", &w[..1], &gens).unwrap();
    println!("shifted: {i}");
}
