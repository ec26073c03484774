//! The star product b ⋆ a acts through matrix representations,
//! M(b ⋆ a) = M(b) M(a), and its companion pairing c(d) detects when two
//! rank supports are orthogonal. Products of whole code spaces collapse:
//! the final section builds one-dimensional A and B with dim(B ⋆ A) = 2.

use recp::code::ExtCode;
use recp::field::{Basis, FieldTower};
use recp::linalg::{mat_rep, rank_support};
use recp::star::{space_product_ext, star, transposed_pairing};

fn main() -> recp::Result<()> {
    let t = FieldTower::new(2, 4, None)?;
    let f = t.mid();

    let b = vec![3, 1, 0, 7]; // length m: the left factor acts as a matrix
    let a = vec![5, 9, 2, 6];
    let prod = star(&t, &b, &a)?;
    println!("b      = {b:?}");
    println!("a      = {a:?}");
    println!("b ⋆ a  = {prod:?}");

    let lhs = mat_rep(&t, &prod, Basis::Alpha);
    let rhs = mat_rep(&t, &b, Basis::Alpha).mul(f, &mat_rep(&t, &a, Basis::Alpha))?;
    assert_eq!(lhs, rhs);
    println!("M(b ⋆ a) = M(b) M(a)  ok");

    // The pairing c(d) vanishes exactly when RSupp(c) ⊥ RSupp(d), where
    // the supports are the row spaces of the matrix representations.
    let d = vec![1, 2, 0, 0]; // support span{e1, e2}
    let c = vec![0, 0, 4, 8]; // support span{e3, e4}
    println!("\nRSupp(d) basis rows: {:?}", rank_support(&t, &d).basis().row_vecs());
    println!("RSupp(c) basis rows: {:?}", rank_support(&t, &c).basis().row_vecs());
    println!("c(d) = {:?}", transposed_pairing(&t, &c, &d)?);
    assert_eq!(transposed_pairing(&t, &c, &d)?, vec![0; 4]);
    let overlapping = transposed_pairing(&t, &d, &d)?;
    println!("d(d) = {overlapping:?} (nonzero: supports overlap)");
    assert_ne!(overlapping, vec![0; 4]);

    // Orthogonality is about subspaces, not positions: over F_2 the line
    // span{(1,1,0,0)} is orthogonal to itself, so two vectors sharing it as
    // support pair to zero even though their positions coincide.
    let u = vec![7, 7, 0, 0];
    let v = vec![9, 9, 0, 0];
    assert_eq!(rank_support(&t, &u).basis().row_vecs(), vec![vec![1, 1, 0, 0]]);
    assert_eq!(transposed_pairing(&t, &u, &v)?, vec![0; 4]);
    println!("u(v) = 0 for u = {u:?}, v = {v:?} (self-orthogonal support line)");

    // dim(B ⋆ A) stays small even though products of generic 1-dim spaces
    // could reach dim m: with a the basis vector and b = a + a^[1],
    // M(b) = M(a) + (shifted M(a)), and the product span has dimension 2.
    let alpha = t.alpha().to_vec();
    let mut shifted = Vec::with_capacity(alpha.len());
    for &x in &alpha {
        shifted.push(f.add(x, f.frobenius(t.q(), x, 1)?));
    }
    let a_code = ExtCode::from_rows(f, 4, vec![alpha.clone()])?;
    let b_code = ExtCode::from_rows(f, 4, vec![shifted])?;
    let prod_space = space_product_ext(&t, &b_code, &a_code)?;
    println!(
        "\ndim A = {}, dim B = {}, dim(B ⋆ A) = {}",
        a_code.dim(),
        b_code.dim(),
        prod_space.dim()
    );
    assert_eq!(prod_space.dim(), 2);
    Ok(())
}
