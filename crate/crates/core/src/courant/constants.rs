// Generated by `cargo run --example pin_bracket_constants`; do not edit by hand.
//
// Valid (c1, c2, c3) in {0, ±1, ±2}^3 with F2 entering the bracket:
//   (-1, 2, -2) with dH3 = 1 F2∧F2
//   (1, -2, 2) with dH3 = 1 F2∧F2
// Conditions on the twist: dF2 = 0 and dH3 = KAPPA F2∧F2.
// The solutions differ by e -> -e, which preserves <e, e> = 1; the
// lexicographically smallest is pinned.

pub const C1: i64 = -1;
pub const C2: i64 = 2;
pub const C3: i64 = -2;
pub const KAPPA: (i64, i64) = (1, 1);
