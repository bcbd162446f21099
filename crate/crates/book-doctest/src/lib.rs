//! Runs the code listings of the guide in `book/` as doc-tests.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(introduction, "introduction.md");
chapter!(partitions, "partitions.md");
chapter!(tableaux, "tableaux.md");
chapter!(characters, "characters.md");
chapter!(binomial_basis, "binomial-basis.md");
chapter!(primary_partitions, "primary-partitions.md");
chapter!(expansions, "expansions.md");
chapter!(verification, "verification.md");
chapter!(cli, "cli.md");
