//! The same decoding problem in two pictures. A pair of extension codes
//! converts to a pair of matrix codes (A and B in the working basis, C in
//! the dual basis), and the matrix-side decoder must agree with the
//! extension-side one on corresponding received words.

use recp::code::random_rank_error_ext;
use recp::decoder::{convert_pair, decode_base, decode_ext, validate_base_pair};
use recp::families::gabidulin_recp;
use recp::field::{Basis, FieldTower};
use recp::linalg::mat_rep;
use recp::seeding::stream_rng;

fn main() -> recp::Result<()> {
    let t = FieldTower::new(2, 4, None)?;
    let f = t.mid();
    let fq = t.base();

    let ext_pair = gabidulin_recp(&t, 1, t.alpha(), 1, true)?;
    let base_pair = convert_pair(&t, &ext_pair)?;
    println!(
        "converted pair: {}x{} matrices, dims (A, B, C) = ({}, {}, {})",
        base_pair.rows_m(),
        base_pair.cols_n(),
        base_pair.a().dim_fq(),
        base_pair.b().dim_fq(),
        base_pair.c().dim_fq()
    );

    let cert = validate_base_pair(fq, &base_pair)?;
    assert!(cert.correcting, "conversion must preserve the pair conditions");
    println!("matrix-side pair conditions hold");

    let codeword = ext_pair.c().encode(f, &vec![14, 5])?;
    let mut rng = stream_rng(3, "two-pictures");
    let error = random_rank_error_ext(&t, 4, 1, &mut rng)?;
    let received: Vec<u64> = codeword.iter().zip(&error).map(|(&c, &e)| f.add(c, e)).collect();

    let ext_out = decode_ext(&t, &ext_pair, &received)?;
    // C converts through the dual basis, so received words do too.
    let received_mat = mat_rep(&t, &received, Basis::AlphaPrime);
    let base_out = decode_base(fq, &base_pair, &received_mat)?;

    println!("\nextension side: {:?}", ext_out.status);
    println!("matrix side:    {:?}", base_out.status);
    assert_eq!(ext_out.status, base_out.status);

    let ext_cw = ext_out.codeword.expect("decoded");
    let base_cw = base_out.codeword.expect("decoded");
    assert_eq!(mat_rep(&t, &ext_cw, Basis::AlphaPrime), base_cw);
    println!("both sides recovered the same codeword:");
    println!("  vector form: {ext_cw:?}");
    println!("  matrix form (dual-basis columns):");
    for row in base_cw.row_vecs() {
        println!("    {row:?}");
    }
    Ok(())
}
