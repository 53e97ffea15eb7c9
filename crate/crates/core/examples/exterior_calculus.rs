//! Polynomial forms on R^3: `d² = 0` and Cartan's formula on parsed input.

use bn_courant::symbolic::{parse_polynomial, DifferentialForm, VectorField};

fn main() {
    let f = parse_polynomial("x1^2*x2 - 3/2*x3", 3).unwrap();
    let df = DifferentialForm::differential(3, &f);
    println!("f   = {f}");
    println!("ddf = 0: {}", df.exterior_derivative().is_zero());

    let x = VectorField::new(vec![
        parse_polynomial("x2", 3).unwrap(),
        parse_polynomial("-x1", 3).unwrap(),
        parse_polynomial("x1*x3", 3).unwrap(),
    ]);
    let alpha = DifferentialForm::one_form(&[
        parse_polynomial("x3", 3).unwrap(),
        parse_polynomial("0", 3).unwrap(),
        parse_polynomial("x1*x2", 3).unwrap(),
    ]);
    let lie = alpha.lie_derivative(&x).unwrap();
    let cartan = alpha
        .exterior_derivative()
        .interior(&x)
        .unwrap()
        .add(&alpha.interior(&x).unwrap().exterior_derivative())
        .unwrap();
    println!("L_X α = i_X dα + d i_X α: {}", lie == cartan);
}
