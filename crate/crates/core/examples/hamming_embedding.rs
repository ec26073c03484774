//! Hamming-metric pairs as a special case of the rank machinery. A GRS
//! [7, 3, 5] code over F_8 gives a pair correcting 2 errors; each received
//! word also embeds as a diagonal-supported matrix problem, and both the
//! classical pair decoder and the embedded rank decoder must return the
//! same answer.

use recp::field::El;
use recp::hamming::{decode_hamming, decode_hamming_classical, grs_demo_pair};

fn main() -> recp::Result<()> {
    let (f, pair) = grs_demo_pair()?;
    println!(
        "n = {}, radius = {}, dims (A, B, C) = ({}, {}, {}), d_H(C) = {}",
        pair.n(),
        pair.radius(),
        pair.a().dim(),
        pair.b().dim(),
        pair.c().dim(),
        pair.dist_c()
    );
    println!(
        "embedded matrix pair: {}x{}",
        pair.embedded().rows_m(),
        pair.embedded().cols_n()
    );

    let codeword = pair.c().codeword_at(&f, 5);
    let mut received = codeword.clone();
    received[1] = f.add(received[1], 3);
    received[4] = f.add(received[4], 6);
    println!("\ncodeword = {codeword:?}");
    println!("received = {received:?} (errors at positions 1 and 4)");

    let via_rank = decode_hamming(&f, &pair, &received)?;
    let classical = decode_hamming_classical(&f, &pair, &received)?;
    println!("rank route:      {:?}", via_rank.status);
    println!("classical route: {:?}", classical.status);
    println!("located positions: {:?}", via_rank.positions);
    assert_eq!(via_rank.codeword.as_deref(), Some(codeword.as_slice()));
    assert_eq!(via_rank.status, classical.status);
    assert_eq!(via_rank.codeword, classical.codeword);
    assert_eq!(via_rank.positions, classical.positions);

    // Sweep every error of Hamming weight <= 2 on one codeword: the two
    // routes never disagree and never miss.
    let n = pair.n();
    let mut patterns = 0u32;
    let mut agree = 0u32;
    let mut recovered = 0u32;
    let mut sweep = |e: &[El]| -> recp::Result<()> {
        let r: Vec<El> = codeword.iter().zip(e).map(|(&c, &x)| f.add(c, x)).collect();
        let a = decode_hamming(&f, &pair, &r)?;
        let b = decode_hamming_classical(&f, &pair, &r)?;
        patterns += 1;
        if a.status == b.status && a.codeword == b.codeword {
            agree += 1;
        }
        if a.codeword.as_deref() == Some(codeword.as_slice()) {
            recovered += 1;
        }
        Ok(())
    };
    for i in 0..n {
        for v in 1..8 {
            let mut e = vec![0; n];
            e[i] = v;
            sweep(&e)?;
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for vi in 1..8 {
                for vj in 1..8 {
                    let mut e = vec![0; n];
                    e[i] = vi;
                    e[j] = vj;
                    sweep(&e)?;
                }
            }
        }
    }
    println!("\nsweep: {patterns} patterns, {recovered} recovered, {agree} agreements");
    assert_eq!(patterns, agree);
    assert_eq!(patterns, recovered);
    Ok(())
}
