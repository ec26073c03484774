//! The acceptance gate. Eleven numbered checks, each ending in one PASS/FAIL
//! line (visible with --nocapture; a FAIL also panics with the same line).
//! Tolerances are exact and every randomized stream is seeded, so reruns are
//! bit-identical.

use rand::Rng;
use recp::bounds::{bound_dual_product, bound_product, rank_ht_bound, roos_bound, singleton_sum};
use recp::code::{to_matrix_code, ExtCode, MatrixCode};
use recp::decoder::{
    convert_pair, decode_base, decode_ext, locate_support_ext, DecodeStatus, ExtPair, PairGrade,
};
use recp::families::{find_normal_element, gabidulin, gabidulin_recp, skew_cyclic_locating_pair};
use recp::field::{Basis, El, Field, FieldTower};
use recp::hamming::{decode_hamming, decode_hamming_classical, grs_demo_pair, HammingPair};
use recp::linalg::{mat_rep, rank_support, rank_weight, rep_inverse, Mat};
use recp::linpoly::{interpolate_chain, interpolate_moore, LinPoly};
use recp::seeding::stream_rng;
use recp::star::{space_product_base, space_product_ext, star};
use std::sync::Arc;

fn verdict(tag: &str, detail: &str, ok: bool) {
    let line = format!("[{tag}] {detail}: {}", if ok { "PASS" } else { "FAIL" });
    println!("{line}");
    assert!(ok, "{line}");
}

/// All q^len vectors over F_q, little-endian in idx.
fn all_vecs(q: u64, len: usize) -> Vec<Vec<El>> {
    let total = q.pow(len as u32);
    (0..total)
        .map(|idx| (0..len).map(|j| (idx / q.pow(j as u32)) % q).collect())
        .collect()
}

/// Every rank-1 m×n matrix over the base field, exactly once: u runs over
/// projective representatives (first nonzero digit 1), v over all nonzero.
fn rank_one_mats(fq: &Field, m: usize, n: usize) -> Vec<Mat> {
    let q = fq.order();
    let mut out = Vec::new();
    for u in all_vecs(q, m) {
        match u.iter().find(|&&x| x != 0) {
            Some(&first) if first == 1 => {}
            _ => continue,
        }
        for v in all_vecs(q, n) {
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            out.push(Mat::from_fn(m, n, |i, j| fq.mul(u[i], v[j])));
        }
    }
    out
}

// Shared settings: the streams below feed two criteria each (a decoding
// check and the ML-oracle cross-check), so they are deterministic functions.

fn type1_setting() -> (FieldTower, ExtPair) {
    let t = FieldTower::new(2, 4, None).unwrap();
    let alpha = t.alpha().to_vec();
    let pair = gabidulin_recp(&t, 1, &alpha, 1, true).unwrap();
    (t, pair)
}

/// 225 rank-1 errors x 20 seeded codewords as (codeword, received) pairs.
fn type1_instances(t: &FieldTower, pair: &ExtPair) -> Vec<(Vec<El>, Vec<El>)> {
    let f = t.mid();
    let errors = rank_one_mats(&t.base(), t.m(), pair.n());
    assert_eq!(errors.len(), 225);
    let code = pair.c();
    let mut rng = stream_rng(2, "acceptance-type1");
    let mut out = Vec::with_capacity(errors.len() * 20);
    for _ in 0..20 {
        let msg: Vec<El> = (0..code.dim()).map(|_| rng.gen_range(0..f.order())).collect();
        let cw = code.encode(f, &msg).unwrap();
        for mat in &errors {
            let e = rep_inverse(t, mat, Basis::Alpha).unwrap();
            let r: Vec<El> = cw.iter().zip(&e).map(|(&c, &x)| f.add(c, x)).collect();
            out.push((cw.clone(), r));
        }
    }
    out
}

fn hamming_setting() -> (Arc<Field>, HammingPair) {
    grs_demo_pair().unwrap()
}

/// All 1078 error patterns of Hamming weight 1 and 2 x 5 seeded codewords.
fn hamming_instances(f: &Field, pair: &HammingPair) -> Vec<(Vec<El>, Vec<El>)> {
    let n = pair.n();
    let q = f.order();
    let mut patterns: Vec<Vec<El>> = Vec::with_capacity(1078);
    for i in 0..n {
        for v in 1..q {
            let mut e = vec![0; n];
            e[i] = v;
            patterns.push(e);
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for vi in 1..q {
                for vj in 1..q {
                    let mut e = vec![0; n];
                    e[i] = vi;
                    e[j] = vj;
                    patterns.push(e);
                }
            }
        }
    }
    assert_eq!(patterns.len(), 1078);

    let size = pair.c().size(f) as u64;
    let mut rng = stream_rng(9, "acceptance-hamming");
    let picks = rand::seq::index::sample(&mut rng, size as usize, 5);
    let mut out = Vec::with_capacity(patterns.len() * 5);
    for idx in picks.iter() {
        let cw = pair.c().codeword_at(f, idx as u128);
        for e in &patterns {
            let r: Vec<El> = cw.iter().zip(e).map(|(&c, &x)| f.add(c, x)).collect();
            out.push((cw.clone(), r));
        }
    }
    out
}

fn skew_setting() -> (FieldTower, ExtPair) {
    let t = FieldTower::new(2, 2, None).unwrap().with_top_level(2, None).unwrap();
    let normal = find_normal_element(&t, 5).unwrap();
    let pair = skew_cyclic_locating_pair(&t, normal, &[0, 2], &[1, 3], 1).unwrap();
    (t, pair)
}

/// All 45 rank-1 errors x 10 seeded codewords as (codeword, error, received).
fn skew_instances(t: &FieldTower, pair: &ExtPair) -> Vec<(Vec<El>, Vec<El>, Vec<El>)> {
    let f = t.mid();
    let errors = rank_one_mats(&t.base(), t.m(), pair.n());
    assert_eq!(errors.len(), 45);
    let size = pair.c().size(f) as usize;
    let mut rng = stream_rng(10, "acceptance-skew");
    let picks = rand::seq::index::sample(&mut rng, size, size.min(10));
    let mut out = Vec::with_capacity(errors.len() * 10);
    for idx in picks.iter() {
        let cw = pair.c().codeword_at(f, idx as u128);
        for mat in &errors {
            let e = rep_inverse(t, mat, Basis::Alpha).unwrap();
            let r: Vec<El> = cw.iter().zip(&e).map(|(&c, &x)| f.add(c, x)).collect();
            out.push((cw.clone(), e, r));
        }
    }
    out
}

#[test]
fn c01_gabidulin_distances_meet_the_singleton_equality() {
    let mut ok = true;
    for (q, n, ks) in [(2u64, 4usize, &[1usize, 2, 3][..]), (3, 3, &[1, 2][..])] {
        let t = FieldTower::new(q, n, None).unwrap();
        let alpha = t.alpha().to_vec();
        for &k in ks {
            let code = gabidulin(&t, k, 1, &alpha).unwrap();
            let d = code.min_rank_distance(&t).unwrap();
            ok &= d == n - k + 1;
        }
    }
    verdict("01", "brute-forced d_R = n - k + 1 on both towers", ok);
}

#[test]
fn c02_radius_one_pair_decodes_every_rank_one_error() {
    let (t, pair) = type1_setting();
    let instances = type1_instances(&t, &pair);
    assert_eq!(instances.len(), 4500);
    let mut failures = 0;
    for (cw, r) in &instances {
        let out = decode_ext(&t, &pair, r).unwrap();
        if out.status != DecodeStatus::Success || out.codeword.as_deref() != Some(cw.as_slice()) {
            failures += 1;
        }
    }
    verdict("02", &format!("{failures} failures over 4500 vector-side decodes"), failures == 0);
}

#[test]
fn c03_matrix_side_decoding_agrees_on_every_instance() {
    let (t, pair) = type1_setting();
    let base = convert_pair(&t, &pair).unwrap();
    let fq = t.base();
    let instances = type1_instances(&t, &pair);
    let mut agreements = 0;
    for (cw, r) in &instances {
        let out = decode_base(fq, &base, &mat_rep(&t, r, Basis::AlphaPrime)).unwrap();
        let want = mat_rep(&t, cw, Basis::AlphaPrime);
        if out.status == DecodeStatus::Success && out.codeword.as_ref() == Some(&want) {
            agreements += 1;
        }
    }
    verdict(
        "03",
        &format!("{agreements}/4500 matrix-side decodes match the vector side"),
        agreements == 4500,
    );
}

#[test]
fn c04_evaluation_intertwines_composition_with_the_star_product() {
    let mut ok = true;

    // seeded draws over the 4-dimensional tower
    let t = FieldTower::new(2, 4, None).unwrap();
    let f = t.mid();
    let mut rng = stream_rng(4, "acceptance-ev");
    for _ in 0..1000 {
        let fc: Vec<El> = (0..4).map(|_| rng.gen_range(0..16)).collect();
        let gc: Vec<El> = (0..4).map(|_| rng.gen_range(0..16)).collect();
        let b: Vec<El> = (0..4).map(|_| rng.gen_range(0..16)).collect();
        let fp = LinPoly::new(1, fc).unwrap();
        let gp = LinPoly::new(1, gc).unwrap();
        let lhs = fp.compose(f, 2, &gp).unwrap().eval_vec(f, 2, &b).unwrap();
        let ev_f = fp.eval_vec(f, 2, t.alpha()).unwrap();
        let ev_g = gp.eval_vec(f, 2, &b).unwrap();
        ok &= lhs == star(&t, &ev_f, &ev_g).unwrap();
    }

    // exhaustive over the 2-dimensional tower: 16 F x 16 G x 16 b
    let t2 = FieldTower::new(2, 2, None).unwrap();
    let f2 = t2.mid();
    let pairs = all_vecs(4, 2);
    for fc in &pairs {
        let fp = LinPoly::new(1, fc.clone()).unwrap();
        let ev_f = fp.eval_vec(f2, 2, t2.alpha()).unwrap();
        for gc in &pairs {
            let gp = LinPoly::new(1, gc.clone()).unwrap();
            let comp = fp.compose(f2, 2, &gp).unwrap();
            for b in &pairs {
                let lhs = comp.eval_vec(f2, 2, b).unwrap();
                let ev_g = gp.eval_vec(f2, 2, b).unwrap();
                ok &= lhs == star(&t2, &ev_f, &ev_g).unwrap();
            }
        }
    }

    // star associativity, exhaustive over F_4^2 triples
    for c in &pairs {
        for d in &pairs {
            let cd = star(&t2, c, d).unwrap();
            for e in &pairs {
                let de = star(&t2, d, e).unwrap();
                ok &= star(&t2, c, &de).unwrap() == star(&t2, &cd, e).unwrap();
            }
        }
    }
    verdict("04", "1000 seeded + 2x4096 exhaustive evaluation/associativity checks", ok);
}

#[test]
fn c05_interpolation_is_unique_and_both_routes_agree() {
    let t = FieldTower::new(2, 4, None).unwrap();
    let f = t.mid();
    let alpha = t.alpha().to_vec();
    let mut rng = stream_rng(5, "acceptance-interp");
    let mut ok = true;
    for i in 0..500 {
        let n = 2 + (i % 3);
        let values: Vec<El> = (0..n).map(|_| rng.gen_range(0..16)).collect();
        let moore = interpolate_moore(f, 2, &alpha[..n], &values).unwrap();
        let chain = interpolate_chain(f, 2, &alpha[..n], &values).unwrap();
        ok &= moore == chain;
        ok &= moore.eval_vec(f, 2, &alpha[..n]).unwrap() == values;
    }
    verdict("05", "500 interpolations reproduce their data, chain = Moore", ok);
}

#[test]
fn c06_product_of_lines_has_dimension_two() {
    let t = FieldTower::new(2, 4, None).unwrap();
    let f = t.mid();
    let alpha = t.alpha().to_vec();
    let mut shifted = Vec::with_capacity(4);
    for &x in &alpha {
        shifted.push(f.add(x, f.frobenius(2, x, 1).unwrap()));
    }
    let a_code = ExtCode::from_rows(f, 4, vec![alpha]).unwrap();
    let b_code = ExtCode::from_rows(f, 4, vec![shifted]).unwrap();
    let prod = space_product_ext(&t, &b_code, &a_code).unwrap();
    let ok = a_code.dim() == 1 && b_code.dim() == 1 && prod.dim() == 2;
    verdict("06", &format!("dim A = dim B = 1, dim(B * A) = {}", prod.dim()), ok);
}

#[test]
fn c07_dual_code_in_the_dual_basis_is_the_trace_dual() {
    let mut ok = true;
    let mut rng = stream_rng(7, "acceptance-duality");
    for m in [2usize, 3] {
        let t = FieldTower::new(2, m, None).unwrap();
        let f = t.mid();
        let fq = t.base();
        for _ in 0..25 {
            let dim = rng.gen_range(0..=m);
            let rows: Vec<Vec<El>> = (0..dim)
                .map(|_| (0..m).map(|_| rng.gen_range(0..f.order())).collect())
                .collect();
            let code = ExtCode::from_rows(f, m, rows).unwrap();
            let lhs = to_matrix_code(&t, &code.dual(f), Basis::AlphaPrime).unwrap();
            let rhs = to_matrix_code(&t, &code, Basis::Alpha).unwrap().dual(fq);
            ok &= lhs.basis_flat() == rhs.basis_flat();
        }
    }
    verdict("07", "50 random codes: canonical forms of both duals identical", ok);
}

/// Random F_q-subcode of a matrix code: seeded combinations of its basis.
fn random_subcode(fq: &Field, code: &MatrixCode, rng: &mut impl Rng) -> MatrixCode {
    let basis = code.basis_matrices();
    let keep = rng.gen_range(0..=basis.len());
    let mut mats = Vec::with_capacity(keep);
    for _ in 0..keep {
        let mut acc = Mat::zero(code.rows_m(), code.cols_n());
        for b in &basis {
            let coef = rng.gen_range(0..fq.order());
            if coef != 0 {
                acc = acc.add(fq, &b.scale(fq, coef)).unwrap();
            }
        }
        mats.push(acc);
    }
    MatrixCode::from_matrices(fq, code.rows_m(), code.cols_n(), mats).unwrap()
}

/// A random line in F_{q^m}^2 spanned by a rank-weight-2 vector.
fn random_full_line(t: &FieldTower, rng: &mut impl Rng) -> ExtCode {
    let f = t.mid();
    loop {
        let y = rng.gen_range(1..f.order());
        let x = rng.gen_range(1..f.order());
        if rank_weight(t, &[y, x]) == 2 {
            return ExtCode::from_rows(f, 2, vec![vec![y, x]]).unwrap();
        }
    }
}

#[test]
fn c08_bound_premises_never_outrun_their_conclusions() {
    let mut ok = true;
    let mut counts: Vec<(String, usize, usize)> = Vec::new(); // (bound, admissible, draws)

    // singleton sum: no premises, every code is an instance
    {
        let mut rng = stream_rng(8, "acceptance-singleton");
        let mut admissible = 0;
        for q in [2u64, 3] {
            let fq = Field::prime(q).unwrap();
            for _ in 0..50 {
                let nm = rng.gen_range(2..=3usize);
                let dim = rng.gen_range(0..=nm * nm);
                let rows: Vec<Vec<El>> = (0..dim)
                    .map(|_| (0..nm * nm).map(|_| rng.gen_range(0..q)).collect())
                    .collect();
                let code = MatrixCode::from_flat_rows(&fq, nm, nm, rows).unwrap();
                let rep = singleton_sum(&fq, &code).unwrap();
                ok &= rep.verified;
                admissible += 1;
            }
        }
        counts.push(("singleton".into(), admissible, 100));
    }

    // product bound: random matrix images over the 2x2 tower plus converted
    // Gabidulin data with random subcodes of C
    {
        let t = FieldTower::new(2, 2, None).unwrap();
        let f = t.mid();
        let fq = t.base();
        let mut rng = stream_rng(8, "acceptance-product");
        let mut admissible = 0;
        let mut draws = 0;
        while admissible < 50 && draws < 4000 {
            draws += 1;
            let image = |rng: &mut rand_chacha::ChaCha12Rng| {
                let dim = rng.gen_range(1..=2usize);
                let rows: Vec<Vec<El>> = (0..dim)
                    .map(|_| (0..2).map(|_| rng.gen_range(0..4)).collect())
                    .collect();
                let ext = ExtCode::from_rows(f, 2, rows).unwrap();
                to_matrix_code(&t, &ext, Basis::Alpha).unwrap()
            };
            let a_code = image(&mut rng);
            let b_code = image(&mut rng);
            let c_code = space_product_base(fq, &b_code, &a_code).unwrap().dual(fq);
            let a = rng.gen_range(1..=2);
            let b = rng.gen_range(1..=2);
            let rep = bound_product(fq, &a_code, &b_code, &c_code, a, b).unwrap();
            if rep.premises_hold {
                admissible += 1;
                ok &= rep.verified;
            }
        }
        let random_draws = draws;

        let (t4, pair) = type1_setting();
        let base = convert_pair(&t4, &pair).unwrap();
        let fq4 = t4.base();
        for _ in 0..50 {
            let sub = random_subcode(fq4, base.c(), &mut rng);
            let rep = bound_product(fq4, base.a(), base.b(), &sub, 1, 1).unwrap();
            if rep.premises_hold {
                admissible += 1;
                ok &= rep.verified;
            }
        }
        ok &= admissible >= 100;
        counts.push(("product".into(), admissible, random_draws + 50));
    }

    // dual product bound: images of full-weight lines have all-invertible
    // duals, which is exactly what the premises ask for
    {
        let towers = [
            FieldTower::new(2, 2, None).unwrap(),
            FieldTower::new(3, 2, None).unwrap(),
            FieldTower::new(4, 2, None).unwrap(),
        ];
        let mut rng = stream_rng(8, "acceptance-dual-product");
        let mut admissible = 0;
        let mut draws = 0;
        while admissible < 100 && draws < 4000 {
            draws += 1;
            let t = &towers[rng.gen_range(0..towers.len())];
            let fq = t.base();
            let a_code = to_matrix_code(t, &random_full_line(t, &mut rng), Basis::Alpha).unwrap();
            let b_code = to_matrix_code(t, &random_full_line(t, &mut rng), Basis::Alpha).unwrap();
            let c_code = space_product_base(fq, &b_code, &a_code).unwrap().dual(fq);
            let rep = bound_dual_product(fq, &a_code, &b_code, &c_code, 1, 1).unwrap();
            if rep.premises_hold {
                admissible += 1;
                ok &= rep.verified;
            }
        }
        ok &= admissible == 100;
        counts.push(("dual-product".into(), admissible, draws));
    }

    // roos bound: converted Gabidulin pairs; the premises only constrain A
    // and B, so random subcodes of C stay admissible
    {
        let mut rng = stream_rng(8, "acceptance-roos");
        let mut admissible = 0;
        let mut draws = 0;
        for (q, n) in [(2u64, 4usize), (3, 3)] {
            let t = FieldTower::new(q, n, None).unwrap();
            let alpha = t.alpha().to_vec();
            let pair = gabidulin_recp(&t, 1, &alpha, 1, true).unwrap();
            let base = convert_pair(&t, &pair).unwrap();
            let fq = t.base();
            for _ in 0..50 {
                draws += 1;
                let sub = random_subcode(fq, base.c(), &mut rng);
                let rep = roos_bound(fq, base.a(), base.b(), &sub, 1, 1).unwrap();
                if rep.premises_hold {
                    admissible += 1;
                    ok &= rep.verified;
                }
            }
        }
        ok &= admissible == 100;
        counts.push(("roos".into(), admissible, draws));
    }

    // rank-HT: index sets built from the exponent ladder itself, plus noise
    {
        let towers = [
            FieldTower::new(2, 2, None).unwrap().with_top_level(2, None).unwrap(),
            FieldTower::new(3, 2, None).unwrap().with_top_level(2, None).unwrap(),
            FieldTower::new(2, 3, None).unwrap().with_top_level(2, None).unwrap(),
            FieldTower::new(2, 2, None).unwrap().with_top_level(3, None).unwrap(),
        ];
        let normals: Vec<El> =
            towers.iter().map(|t| find_normal_element(t, 11).unwrap()).collect();
        let mut rng = stream_rng(8, "acceptance-rank-ht");
        let mut admissible = 0;
        let mut draws = 0;
        while admissible < 100 && draws < 4000 {
            draws += 1;
            let k = rng.gen_range(0..towers.len());
            let t = &towers[k];
            let (m, n) = (t.m(), t.n_top());
            let delta = rng.gen_range(2..=m);
            let w = rng.gen_range(0..=m - delta);
            let b = rng.gen_range(1..n);
            let c = rng.gen_range(1..n);
            let mut exps: Vec<usize> = Vec::new();
            for j in 0..=w {
                for i in 0..=delta - 2 {
                    exps.push((b + i + j * c) % n);
                }
            }
            let count = exps.len();
            exps.sort_unstable();
            exps.dedup();
            if exps.len() != count {
                continue; // repeated exponent: premise 3 cannot hold
            }
            let mut set: std::collections::BTreeSet<usize> = exps.into_iter().collect();
            for _ in 0..rng.gen_range(0..=2usize) {
                set.insert(rng.gen_range(0..n));
            }
            // index sets describe F_{q^m}-linear codes, so they must be
            // closed under the Galois shift +m mod n
            loop {
                let grow: Vec<usize> =
                    set.iter().map(|&i| (i + m) % n).filter(|x| !set.contains(x)).collect();
                if grow.is_empty() {
                    break;
                }
                set.extend(grow);
            }
            let i_set: Vec<usize> = set.into_iter().collect();
            let rep = rank_ht_bound(t, normals[k], &i_set, b, c, delta, w).unwrap();
            if rep.premises_hold {
                admissible += 1;
                ok &= rep.verified;
            }
        }
        ok &= admissible == 100;
        counts.push(("rank-ht".into(), admissible, draws));
    }

    let summary: Vec<String> = counts
        .iter()
        .map(|(name, adm, draws)| format!("{name} {adm}/{draws}"))
        .collect();
    verdict("08", &format!("admissible instances all verified ({})", summary.join(", ")), ok);
}

#[test]
fn c09_hamming_sweep_decodes_exactly_and_matches_the_classical_route() {
    let (f, pair) = hamming_setting();
    let instances = hamming_instances(&f, &pair);
    assert_eq!(instances.len(), 5390);
    let mut exact = 0;
    let mut agree = 0;
    for (cw, r) in &instances {
        let a = decode_hamming(&f, &pair, r).unwrap();
        let b = decode_hamming_classical(&f, &pair, r).unwrap();
        if a.status == DecodeStatus::Success && a.codeword.as_deref() == Some(cw.as_slice()) {
            exact += 1;
        }
        if a.status == b.status
            && a.codeword == b.codeword
            && a.error == b.error
            && a.positions == b.positions
            && a.dim_kernel == b.dim_kernel
        {
            agree += 1;
        }
    }
    verdict(
        "09",
        &format!("{exact}/5390 exact decodes, {agree}/5390 route agreements"),
        exact == 5390 && agree == 5390,
    );
}

#[test]
fn c10_skew_pair_always_locates_the_error_support() {
    let (t, pair) = skew_setting();
    assert_eq!(pair.grade(), PairGrade::Locating);
    let instances = skew_instances(&t, &pair);
    assert_eq!(instances.len(), 450);
    let mut located = 0;
    for (_, e, r) in &instances {
        let support = locate_support_ext(&t, &pair, r).unwrap();
        if let Some(l) = support {
            if l.contains_space(&t.base(), &rank_support(&t, e)) {
                located += 1;
            }
        }
    }

    // The upgrade condition d_R(A) + d_R(C) > n: nondegenerate codes at
    // m = 2 have both distances capped by the 2-row representation, but
    // degenerate C (sentinel distance n + 1) still upgrades, so the scan
    // over every index-set combination finds real correcting pairs and the
    // decoder must deliver on each of them.
    let normal = find_normal_element(&t, 5).unwrap();
    let n = t.n_top();
    let mut correcting_pairs = 0;
    let mut upgraded_failures = 0;
    for i_mask in 1u32..(1 << n) {
        for j_mask in 1u32..(1 << n) {
            let i_set: Vec<usize> = (0..n).filter(|&b| i_mask & (1 << b) != 0).collect();
            let j_set: Vec<usize> = (0..n).filter(|&b| j_mask & (1 << b) != 0).collect();
            let Ok(p) = skew_cyclic_locating_pair(&t, normal, &i_set, &j_set, 1) else {
                continue;
            };
            if p.grade() != PairGrade::Correcting {
                continue;
            }
            correcting_pairs += 1;
            for (cw, _, r) in skew_instances(&t, &p) {
                let out = decode_ext(&t, &p, &r).unwrap();
                if out.status != DecodeStatus::Success || out.codeword.as_deref() != Some(&cw[..])
                {
                    upgraded_failures += 1;
                }
            }
        }
    }
    verdict(
        "10",
        &format!(
            "{located}/450 supports contained; {correcting_pairs} correcting upgrades, {upgraded_failures} upgrade failures"
        ),
        located == 450 && upgraded_failures == 0,
    );
}

#[test]
fn c11_the_brute_force_oracle_confirms_every_decoded_instance() {
    let mut ok = true;

    // vector-side stream
    let (t, pair) = type1_setting();
    let mut checked = 0;
    for (cw, r) in type1_instances(&t, &pair) {
        let ml = pair.c().ml_decode(&t, &r).unwrap();
        ok &= !ml.tie && ml.codeword == cw;
        checked += 1;
    }

    // matrix-side stream: same instances through the converted code
    let base = convert_pair(&t, &pair).unwrap();
    let fq = t.base();
    for (cw, r) in type1_instances(&t, &pair) {
        let (ml_cw, _, tie) = base.c().ml_decode(fq, &mat_rep(&t, &r, Basis::AlphaPrime)).unwrap();
        ok &= !tie && ml_cw == mat_rep(&t, &cw, Basis::AlphaPrime);
        checked += 1;
    }

    // Hamming stream: minimum Hamming distance over all q^k codewords
    let (f, hpair) = hamming_setting();
    let size = hpair.c().size(&f);
    let codebook: Vec<Vec<El>> = (0..size).map(|i| hpair.c().codeword_at(&f, i)).collect();
    for (cw, r) in hamming_instances(&f, &hpair) {
        let mut best = usize::MAX;
        let mut best_cw: &[El] = &[];
        let mut tie = false;
        for cand in &codebook {
            let d = cand.iter().zip(&r).filter(|(&a, &b)| a != b).count();
            if d < best {
                best = d;
                best_cw = cand;
                tie = false;
            } else if d == best {
                tie = true;
            }
        }
        ok &= !tie && best_cw == cw.as_slice();
        checked += 1;
    }

    // skew stream: the pair only locates here (no codeword is produced to
    // cross-check), so the oracle instead confirms each instance is within
    // its claimed distance of the transmitted codeword
    let (ts, spair) = skew_setting();
    for (cw, e, r) in skew_instances(&ts, &spair) {
        let ml = spair.c().ml_decode(&ts, &r).unwrap();
        ok &= ml.distance <= rank_weight(&ts, &e);
        let diff: Vec<El> = r.iter().zip(&cw).map(|(&a, &b)| ts.mid().sub(a, b)).collect();
        ok &= rank_weight(&ts, &diff) == 1;
        checked += 1;
    }

    verdict("11", &format!("{checked} oracle cross-checks, all consistent"), ok);
}
