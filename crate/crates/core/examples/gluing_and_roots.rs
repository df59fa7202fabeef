// Gluing a list on one of its words, and replacing code words by their roots.

use binprim::primpres::{glue, has_cyclic_square, root_morphism};
use binprim::{BinaryCode, Word, WordList};

fn main() {
    let ws = WordList::from(&["a", "a", "b", "a", "b"][..]);
    let glued = glue(&ws, &Word::from("a")).unwrap();
    println!("{ws} glued on a: {glued} (concat {} = {})", ws.concat(), glued.concat());

    let code = BinaryCode::new("abab".into(), "aa".into()).unwrap();
    let ws = WordList::from(&["abab", "aa", "abab"][..]);
    let image = root_morphism(&ws, &code).unwrap();
    println!("roots of {ws}: {image}");
    println!(
        "primitive {} -> {}, cyclic square [ab,ab]: {}",
        ws.is_primitive(),
        image.is_primitive(),
        has_cyclic_square(&image, &Word::from("ab"))
    );
}
