//! Minimum-rank-distance bounds with checked premises. Every verifier
//! brute-forces the premises and the actual distance on the given codes,
//! so `verified` means the instance really witnesses the theorem, not
//! just that the inequality happens to hold.

use recp::bounds::{bound_dual_product, bound_product, rank_ht_bound, roos_bound, singleton_sum, BoundReport};
use recp::code::{to_matrix_code, ExtCode};
use recp::decoder::convert_pair;
use recp::families::{find_normal_element, gabidulin_recp};
use recp::field::{Basis, FieldTower};
use recp::star::space_product_base;

fn show(report: &BoundReport) {
    println!("\n[{}] {:?}", report.name, report.params);
    for p in &report.premises {
        println!("  premise {:32} {} ({})", p.name, if p.holds { "ok" } else { "fails" }, p.detail);
    }
    println!("  conclusion: {}", report.conclusion);
    println!("  actual distance {}, verified: {}", report.actual, report.verified);
}

fn main() -> recp::Result<()> {
    let t = FieldTower::new(2, 4, None)?;
    let fq = t.base();

    // A Gabidulin pair converted to matrix codes feeds three of the bounds.
    let pair = gabidulin_recp(&t, 1, t.alpha(), 1, false)?;
    let base = convert_pair(&t, &pair)?;

    let singleton = singleton_sum(fq, base.c())?;
    show(&singleton);
    assert!(singleton.verified); // MRD: met with equality

    let product = bound_product(fq, base.a(), base.b(), base.c(), 1, 1)?;
    show(&product);
    assert!(product.verified);

    let roos = roos_bound(fq, base.a(), base.b(), base.c(), 1, 1)?;
    show(&roos);
    assert!(roos.verified);

    // The dual-product premises want an all-invertible dual of the product
    // space; the matrix image of the weight-2 line (1, ω) over F_4 is one.
    let t2 = FieldTower::new(2, 2, None)?;
    let line = ExtCode::from_rows(t2.mid(), 2, vec![vec![1, 2]])?;
    let a_code = to_matrix_code(&t2, &line, Basis::Alpha)?;
    let b_code = a_code.clone();
    let c_code = space_product_base(t2.base(), &b_code, &a_code)?.dual(t2.base());
    let dual_product = bound_dual_product(t2.base(), &a_code, &b_code, &c_code, 1, 1)?;
    show(&dual_product);
    assert!(dual_product.verified);

    // The shift-bound relative works on skew-cyclic data directly from the
    // defining index set, no matrix codes needed.
    let ts = FieldTower::new(2, 2, None)?.with_top_level(2, None)?;
    let normal = find_normal_element(&ts, 5)?;
    let ht = rank_ht_bound(&ts, normal, &[0, 2], 2, 1, 2, 0)?;
    show(&ht);
    assert!(ht.verified);
    Ok(())
}
