//! Builds the tower F_2 ⊆ F_16 ⊆ F_256 and shows the basic machinery:
//! coordinates in the working basis and its trace-dual, Frobenius powers,
//! and the duality relation Tr(α_i · α'_j) = δ_ij.

use recp::field::{Basis, FieldTower, Level};

fn main() -> recp::Result<()> {
    let t = FieldTower::new(2, 4, None)?.with_top_level(2, None)?;
    let f = t.mid();

    println!("tower: q = {}, m = {}, s = {}", t.q(), t.m(), t.s());
    println!("mid modulus:  {:?}", f.modulus());
    println!("top modulus:  {:?}", t.top()?.modulus());
    println!("alpha basis:  {:?}", t.alpha());
    println!("dual basis:   {:?}", t.alpha_dual());

    // Tr(α_i α'_j) = δ_ij is what makes coordinate extraction a trace form.
    println!("\nTr(alpha_i * alpha'_j):");
    for &ai in t.alpha() {
        let row: Vec<u64> = t
            .alpha_dual()
            .iter()
            .map(|&dj| t.trace_mid_to_base(f.mul(ai, dj)).unwrap())
            .collect();
        println!("  {row:?}");
    }

    let x = 11; // arbitrary element of F_16
    let coords = t.coords(x, Basis::Alpha);
    println!("\nx = {x}");
    println!("coords over F_2:      {coords:?}");
    println!("recombined:           {}", t.combine(&coords, Basis::Alpha));
    println!("Frobenius x^2:        {}", t.frobenius(Level::Mid, x, 1)?);
    println!("Frobenius x^(2^4):    {} (identity on F_16)", t.frobenius(Level::Mid, x, 4)?);
    println!("trace to F_2:         {}", t.trace_mid_to_base(x)?);

    // Top-level elements decompose over F_16 the same way.
    let y = 200; // element of F_256
    println!("\ny = {y} in F_256");
    println!("coords over F_16:     {:?}", t.top_coords_q(y)?);
    println!("trace to F_16:        {}", t.trace_top_to_mid(y)?);
    println!("trace to F_2:         {}", t.trace_top_to_base(y)?);
    Ok(())
}
