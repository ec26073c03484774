//! Encode, corrupt, decode: a Gabidulin code with its companion pair over
//! F_2 ⊆ F_16, length 4, radius 1. The pair certifies its own decoding
//! conditions before use.

use rand::Rng;
use recp::code::random_rank_error_ext;
use recp::decoder::{decode_ext, validate_ext_pair, DecodeStatus};
use recp::families::gabidulin_recp;
use recp::field::FieldTower;
use recp::linalg::rank_weight;
use recp::seeding::stream_rng;

fn main() -> recp::Result<()> {
    let t = FieldTower::new(2, 4, None)?;
    let f = t.mid();
    let b = t.alpha().to_vec(); // evaluation points: any F_q-independent set
    let pair = gabidulin_recp(&t, 1, &b, 1, true)?;

    let cert = validate_ext_pair(&t, &pair)?;
    for cond in &cert.conditions {
        println!("{:40} {}", cond.name, if cond.holds { "ok" } else { "FAILED" });
    }
    assert!(cert.correcting);

    // k = n - 2t message symbols from F_16
    let code_c = pair.c();
    println!("\nC: length {}, dim {} over F_16", code_c.n(), code_c.dim());
    let message = vec![3, 9];
    let codeword = code_c.encode(f, &message)?;
    println!("message  = {message:?}");
    println!("codeword = {codeword:?}");

    let mut rng = stream_rng(7, "roundtrip");
    let error = random_rank_error_ext(&t, 4, 1, &mut rng)?;
    let received: Vec<u64> = codeword.iter().zip(&error).map(|(&c, &e)| f.add(c, e)).collect();
    println!("error    = {error:?} (rank weight {})", rank_weight(&t, &error));
    println!("received = {received:?}");

    let outcome = decode_ext(&t, &pair, &received)?;
    assert_eq!(outcome.status, DecodeStatus::Success);
    let decoded = outcome.codeword.expect("success carries the codeword");
    println!("decoded  = {decoded:?}");
    assert_eq!(decoded, codeword);

    let support = outcome.support.expect("locator ran");
    println!(
        "located support: dim {} (true error support is contained in it)",
        support.dim()
    );

    // A made-up received word far from the code is reported, not guessed at.
    let garbage: Vec<u64> = (0..4).map(|_| rng.gen_range(0..16)).collect();
    let shrug = decode_ext(&t, &pair, &garbage)?;
    println!("\nrandom word {:?} -> {:?}", garbage, shrug.status);
    Ok(())
}
