//! Runs the code blocks of the guide in `book/src` as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/scalars.md")]
pub mod scalars {}
#[doc = include_str!("../../../book/src/coalgebra.md")]
pub mod coalgebra {}
#[doc = include_str!("../../../book/src/endomorphisms.md")]
pub mod endomorphisms {}
#[doc = include_str!("../../../book/src/tables.md")]
pub mod tables {}
#[doc = include_str!("../../../book/src/families.md")]
pub mod families {}
#[doc = include_str!("../../../book/src/structure.md")]
pub mod structure {}
#[doc = include_str!("../../../book/src/quivers.md")]
pub mod quivers {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}

#[cfg(test)]
mod tests {
    const LIB: &str = include_str!("lib.rs");
    const SUMMARY: &str = include_str!("../../../book/src/SUMMARY.md");

    #[test]
    fn every_chapter_is_tested() {
        let chapters: Vec<&str> = SUMMARY
            .lines()
            .filter_map(|l| l.split_once("](").map(|(_, rest)| rest.trim_end_matches(')')))
            .collect();
        assert_eq!(chapters.len(), 9);
        for c in chapters {
            assert!(LIB.contains(&format!("book/src/{c}\")")), "{c} is not included");
        }
    }
}
