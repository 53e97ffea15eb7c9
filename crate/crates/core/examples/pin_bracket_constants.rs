//! Re-derive the twisted bracket coefficients from the Courant axioms and
//! write `src/courant/constants.rs`.
//!
//! ```text
//! cargo run --example pin_bracket_constants            # print
//! cargo run --example pin_bracket_constants -- --write # overwrite the module
//! ```

use bn_courant::courant::oracle::{render_constants, search_bracket_constants};
use bn_courant::courant::CONSTANTS_SOURCE;

fn main() {
    let outcome = search_bracket_constants(0);
    for sol in &outcome.solutions {
        let c = sol.constants;
        println!(
            "valid: c = ({}, {}, {}), kappa = {}/{}",
            c.c1, c.c2, c.c3, sol.kappa.0, sol.kappa.1
        );
    }
    let source = render_constants(&outcome);
    if std::env::args().any(|a| a == "--write") {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/src/courant/constants.rs");
        std::fs::write(path, &source).expect("write constants module");
        println!("wrote {path}");
    } else if source == CONSTANTS_SOURCE {
        println!("constants module is up to date");
    } else {
        println!("constants module is stale; rerun with --write\n\n{source}");
    }
}
