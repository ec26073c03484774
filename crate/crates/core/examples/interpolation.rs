//! Linearized polynomials: q-power evaluation, two interpolation routes
//! (Moore-matrix solve and the recursive kernel chain), composition, and
//! reduction modulo x^[m] - x.

use recp::field::FieldTower;
use recp::linpoly::{interpolate_chain, interpolate_moore, LinPoly};

fn main() -> recp::Result<()> {
    let t = FieldTower::new(2, 4, None)?;
    let f = t.mid();
    let q = t.q();

    // Points must be F_q-independent; the basis itself is the usual choice.
    let points = t.alpha().to_vec();
    let values = vec![9, 3, 14, 7];

    let p_moore = interpolate_moore(f, q, &points, &values)?;
    let p_chain = interpolate_chain(f, q, &points, &values)?;
    println!("moore route: {p_moore:?}");
    println!("chain route: {p_chain:?}");
    assert_eq!(p_moore, p_chain);

    for (x, want) in points.iter().zip(&values) {
        let got = p_moore.eval(f, q, *x)?;
        assert_eq!(got, *want);
        println!("p({x}) = {got}");
    }

    // Evaluation is F_q-linear, so values off the interpolation set follow.
    let x = f.add(points[0], points[2]);
    let expect = f.add(values[0], values[2]);
    println!("p({x}) = {} (= p(a_1) + p(a_3))", p_moore.eval(f, q, x)?);
    assert_eq!(p_moore.eval(f, q, x)?, expect);

    // Composition multiplies q-degrees; reduction folds x^[m] back onto x.
    let frob = LinPoly::new(1, vec![0, 1])?; // x^[1]
    let comp = p_moore.compose(f, q, &frob)?;
    println!("\n(p ∘ x^[1]) coeffs: {:?}", comp.coeffs());
    let reduced = comp.reduce(f, q)?;
    println!("reduced mod x^[4] - x: {:?}", reduced.coeffs());
    for &x in &points {
        assert_eq!(
            comp.eval(f, q, x)?,
            reduced.eval(f, q, x)?,
            "reduction must preserve the induced map"
        );
    }
    println!("composition and its reduction agree pointwise");
    Ok(())
}
