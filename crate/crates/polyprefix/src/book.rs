//! Runs every Rust code block in the guide (and the README) as a doctest,
//! so the narrative documentation can never drift from the library.

macro_rules! doc_check {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        mod $name {}
    };
}

doc_check!(readme, "../../../README.md");
doc_check!(introduction, "../../../book/src/introduction.md");
doc_check!(exact_arithmetic, "../../../book/src/exact-arithmetic.md");
doc_check!(digits_and_numerals, "../../../book/src/digits-and-numerals.md");
doc_check!(verifying_and_solving, "../../../book/src/verifying-and-solving.md");
doc_check!(three_families, "../../../book/src/three-families.md");
doc_check!(exhaustive_search, "../../../book/src/exhaustive-search.md");
doc_check!(command_line, "../../../book/src/command-line.md");
