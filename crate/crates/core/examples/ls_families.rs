// The equation x^j y^k = z^l: solving, classifying, instantiating.

use binprim::ls_equation::{classify_any, instantiate_family, ls_check, unique_exponents};
use binprim::LsFamily;

fn main() {
    for (x, y, j, k) in [("abba", "b", 1, 2), ("ababa", "baab", 2, 1), ("aba", "b", 1, 1), ("a", "b", 1, 1)] {
        match ls_check(x.as_bytes(), y.as_bytes(), j, k).unwrap() {
            Some(sol) => {
                let (family, mirrored) = classify_any(&sol).unwrap();
                println!("{sol}  family={family} mirrored={mirrored}");
            }
            None => println!("{x}^{j} {y}^{k} is primitive"),
        }
    }

    for spec in ["C{r=a,q=b,m=2}", "D{r=b,q=a,k=2,l=2}", "E{r=a,q=b,m=1,k=2,l=2}", "B{r=a,q=b,m=1,n=0}"] {
        let family: LsFamily = spec.parse().unwrap();
        let (j, k, l) = family.implied_exponents().unwrap();
        println!("{spec} -> {}", instantiate_family(&family, j, k, l).unwrap());
    }
    let a: LsFamily = "A{r=ab,m=2,n=1,t=1}".parse().unwrap();
    println!("A needs exponents: {}", instantiate_family(&a, 1, 2, 4).unwrap());

    let hits = unique_exponents(b"abba", b"b", 5, 5).unwrap();
    println!("imprimitive exponent pairs of {{abba,b}} up to 5: {hits:?}");
}
