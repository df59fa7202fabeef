use std::process::Command;

fn binprim(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_binprim")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn prim() {
    assert_eq!(binprim(&["prim", "babbab"]), ("imprimitive root=bab exp=2\n".into(), 0));
    assert_eq!(binprim(&["prim", "abc"]), ("primitive\n".into(), 0));
    assert_eq!(binprim(&["prim", ""]).1, 2);
}

#[test]
fn witness() {
    assert_eq!(
        binprim(&["witness", "abba", "b"]),
        ("NOT_PRESERVING j=1 k=2 z=abb l=2 swapped=0\n".into(), 0)
    );
    assert_eq!(binprim(&["witness", "b", "abba"]).0, "NOT_PRESERVING j=1 k=2 z=abb l=2 swapped=1\n");
    assert_eq!(binprim(&["witness", "a", "b"]), ("PRESERVING\n".into(), 1));
    assert_eq!(binprim(&["witness", "ab", "abab"]).1, 2);
}

#[test]
fn interpret() {
    assert_eq!(
        binprim(&["interpret", "--square", "01010", "1001"]),
        ("01 | 01010.1001.01010 | 10\n".into(), 0)
    );
    assert_eq!(binprim(&["interpret", "aa", "aa"]), ("- | aa | -\na | aa.aa | a\n".into(), 0));
    assert_eq!(binprim(&["interpret", "--square", "ab", "ba"]), ("b | ba.ba.ba | a\n".into(), 0));
    assert_eq!(binprim(&["interpret", "--square", "aab", "ab"]), (String::new(), 1));
    assert_eq!(binprim(&["interpret", "--square", "ab", "abab"]).1, 2);
}

#[test]
fn ls() {
    assert_eq!(
        binprim(&["ls", "abba", "b", "1", "2"]),
        ("abba^1 b^2 = abb^2 family=D{r=b,q=a,k=2,l=2}\n".into(), 0)
    );
    assert_eq!(
        binprim(&["ls", "--family", "C{r=a,q=b,m=2}"]),
        ("ababa^2 baab^1 = ababaab^2\n".into(), 0)
    );
    assert_eq!(binprim(&["ls", "a", "b", "1", "1"]), ("primitive product\n".into(), 1));
    assert_eq!(binprim(&["ls", "--family", "C{r=a,q=b,m=1}"]).1, 2);
    assert_eq!(binprim(&["ls", "--family", "A{r=ab,m=2,n=1,t=1}", "1", "2", "4"]).0, "abab^1 ab^2 = ab^4\n");
}

#[test]
fn verify() {
    assert_eq!(
        binprim(&["verify", "theorem1", "--code", "abba,b", "--max-list", "8"]),
        ("checked=508 failures=0\n".into(), 0)
    );
    let (out, code) = binprim(&["verify", "ls-unique", "--max-len", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("checked=") && out.ends_with(" failures=0\n"));
    assert_eq!(binprim(&["verify", "nosuch"]).1, 2);
}

#[test]
fn dump() {
    let (out, code) = binprim(&["dump", "words", "--max-len", "2"]);
    assert_eq!((out.as_str(), code), ("a\nb\naa\nab\nba\nbb\n", 0));
    let (out, _) = binprim(&["dump", "ls", "--max-len", "2", "--max-exp", "2"]);
    assert!(out.lines().all(|l| l.starts_with("x^j y^k = z^l : ")));
    assert_eq!(binprim(&["dump", "nothing"]).1, 2);
}
