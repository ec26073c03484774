//! `recp`: construct rank-metric codes and pairs, push codewords through
//! corruption and decoding, validate pairs, and verify distance bounds.
//!
//! Commands read a JSON bundle from stdin (or `-i FILE`), add the keys they
//! produce, and write the result to stdout (or `-o FILE`), so runs compose
//! as pipelines:
//!
//! ```text
//! recp gabidulin --q 2 --m 4 --n 4 --t 1 \
//!   | recp encode --message 3,9 \
//!   | recp corrupt --rank 1 --seed 7 \
//!   | recp decode
//! ```
//!
//! Exit codes: 0 on success, 1 on a negative result (decode failure,
//! failed validation, unverified bound; the JSON always carries the
//! details), 2 on invalid input.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use recp::bounds::{bound_dual_product, bound_product, rank_ht_bound, roos_bound, singleton_sum};
use recp::code::{random_rank_error, random_rank_error_ext, to_matrix_code, MatrixCode};
use recp::decoder::{
    convert_pair, decode_base, decode_ext, validate_base_pair, validate_ext_pair, DecodeStatus,
    PairGrade,
};
use recp::families::{find_normal_element, gabidulin_recp, skew_cyclic_locating_pair};
use recp::field::{Basis, El, FieldTower};
use recp::hamming::{decode_hamming, decode_hamming_classical, grs_demo_pair};
use recp::json::{
    from_json, to_json, Bundle, CodeDesc, CodeKind, FieldDesc, GabidulinSpec, OutcomeDesc,
    PairDesc, PairKind, SkewSpec, WordDesc,
};
use recp::linalg::{mat_rep, Mat};
use recp::seeding::stream_rng;

#[derive(Parser)]
#[command(
    name = "recp",
    version,
    about = "Rank-metric error-correcting pairs: construct, encode, corrupt, decode, validate, bound"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Io {
    /// Input file (default: stdin)
    #[arg(short = 'i', long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a field tower and print its descriptor
    Field {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        /// Mid-level modulus, little-endian coefficients (default: smallest irreducible)
        #[arg(long, value_delimiter = ',')]
        modulus: Option<Vec<El>>,
        /// Top-level degree for a three-level tower
        #[arg(long)]
        s: Option<usize>,
        /// Top-level modulus (requires --s)
        #[arg(long, value_delimiter = ',')]
        modulus2: Option<Vec<El>>,
        /// Custom basis of F_{q^m} over F_q
        #[arg(long, value_delimiter = ',')]
        alpha: Option<Vec<El>>,
        #[command(flatten)]
        io: Io,
    },
    /// Emit a Gabidulin code with its error-correcting pair
    Gabidulin {
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Decoding radius of the emitted pair
        #[arg(long)]
        t: usize,
        /// Frobenius stride
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Evaluation points (default: the first n basis elements)
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<El>>,
        #[command(flatten)]
        io: Io,
    },
    /// Emit a skew-cyclic code with its locating pair
    Skew {
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        /// Normal element of the top field (default: seeded search)
        #[arg(long)]
        normal: Option<El>,
        /// Exponent set I (comma separated, closed under +m mod n)
        #[arg(long = "i", value_delimiter = ',')]
        i_set: Vec<usize>,
        /// Exponent set J
        #[arg(long = "j", value_delimiter = ',')]
        j_set: Vec<usize>,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Encode a message with the bundled code
    Encode {
        /// Message coefficients (default: the bundle's message)
        #[arg(long, value_delimiter = ',')]
        message: Option<Vec<El>>,
        #[command(flatten)]
        io: Io,
    },
    /// Add a random error of exact rank to the bundled codeword
    Corrupt {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Decode the bundled received word with the pair
    Decode {
        /// Pair descriptor file (default: the bundle's pair)
        #[arg(long)]
        pair: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// Brute-verify the defining conditions of a pair
    #[command(name = "validate-pair")]
    ValidatePair {
        /// Pair descriptor file (default: the bundle's pair)
        #[arg(long)]
        pair: Option<PathBuf>,
        #[command(flatten)]
        io: Io,
    },
    /// Minimum rank distance of the bundled code by enumeration
    Distance {
        /// Acknowledge the brute-force engine (the only one there is)
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        io: Io,
    },
    /// Verify a minimum-distance bound and report premises and conclusion
    Bounds {
        #[arg(long, value_parser = ["singleton", "product", "dual-product", "roos", "rank-ht"])]
        name: String,
        /// Bound parameter a (product, roos)
        #[arg(long, default_value_t = 1)]
        a: usize,
        /// Bound parameter b (product, dual-product, roos) or orbit start (rank-ht)
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Bound parameter c (dual-product) or orbit stride (rank-ht)
        #[arg(long, default_value_t = 1)]
        c: usize,
        /// Designed distance delta (rank-ht)
        #[arg(long, default_value_t = 2)]
        delta: usize,
        /// Orbit width w (rank-ht)
        #[arg(long, default_value_t = 0)]
        w: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Expand a type-I pair into the matrix-code type-II pair
    #[command(name = "convert-pair")]
    ConvertPair {
        #[command(flatten)]
        io: Io,
    },
    /// Run the coordinatewise embedding demo on a [7,3,5] code over F_8
    #[command(name = "hamming-demo")]
    HammingDemo {
        #[command(flatten)]
        io: Io,
    },
}

/// Invalid input: message to stderr, exit 2.
struct Invalid(String);

impl From<recp::Error> for Invalid {
    fn from(e: recp::Error) -> Invalid {
        Invalid(e.to_string())
    }
}

/// 0 on success, 1 when the run produced a negative result.
enum Outcome {
    Done,
    Negative,
}

type CmdResult = Result<Outcome, Invalid>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; let clap pick the stream
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(io: &Io) -> Result<String, Invalid> {
    match &io.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Invalid(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Invalid(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn write_output<T: Serialize>(io: &Io, value: &T) -> Result<(), Invalid> {
    let text = to_json(value)?;
    match &io.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_bundle(io: &Io) -> Result<Bundle, Invalid> {
    Ok(from_json(&read_input(io)?)?)
}

/// The pair wins over a bare code or field when several could name a tower.
fn tower_of(bundle: &Bundle) -> Result<FieldTower, Invalid> {
    let desc = bundle
        .pair
        .as_ref()
        .map(|p| &p.a.field)
        .or_else(|| bundle.code.as_ref().map(|c| &c.field))
        .or(bundle.field.as_ref())
        .ok_or_else(|| Invalid("the bundle names no field (pair, code, or field key)".into()))?;
    Ok(desc.to_tower()?)
}

fn pair_from(io_pair: &Option<PathBuf>, bundle: &Bundle) -> Result<PairDesc, Invalid> {
    match io_pair {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Invalid(format!("cannot read {}: {e}", path.display())))?;
            Ok(from_json(&text)?)
        }
        None => bundle
            .pair
            .clone()
            .ok_or_else(|| Invalid("no pair: bundle carries none and --pair not given".into())),
    }
}

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Field { q, m, modulus, s, modulus2, alpha, io } => {
            let mut t = FieldTower::new(q, m, modulus)?;
            if let Some(alpha) = alpha {
                t = t.with_basis(alpha)?;
            }
            if let Some(s) = s {
                t = t.with_top_level(s, modulus2)?;
            } else if modulus2.is_some() {
                return Err(Invalid("--modulus2 requires --s".into()));
            }
            write_output(&io, &FieldDesc::from_tower(&t))?;
            Ok(Outcome::Done)
        }

        Cmd::Gabidulin { q, m, n, t: radius, r, b, io } => {
            let tower = FieldTower::new(q, m, None)?;
            let points = match b {
                Some(b) => b,
                None => {
                    if n > m {
                        return Err(Invalid(format!(
                            "default points need n <= m, got n = {n}, m = {m}"
                        )));
                    }
                    tower.alpha()[..n].to_vec()
                }
            };
            if points.len() != n {
                return Err(Invalid(format!(
                    "expected {n} evaluation points, got {}",
                    points.len()
                )));
            }
            let pair = gabidulin_recp(&tower, r, &points, radius, false)?;
            let bundle = Bundle {
                field: Some(FieldDesc::from_tower(&tower)),
                gabidulin: Some(GabidulinSpec {
                    q: Some(q),
                    k: n - 2 * radius,
                    m,
                    n,
                    r,
                    b: points,
                }),
                code: Some(CodeDesc::from_ext(&tower, pair.c())),
                pair: Some(PairDesc::from_ext_pair(&tower, &pair)),
                ..Bundle::default()
            };
            write_output(&io, &bundle)?;
            Ok(Outcome::Done)
        }

        Cmd::Skew { q, m, s, normal, i_set, j_set, t: radius, seed, io } => {
            let tower = FieldTower::new(q, m, None)?.with_top_level(s, None)?;
            let normal = match normal {
                Some(x) => x,
                None => find_normal_element(&tower, seed)?,
            };
            let pair = skew_cyclic_locating_pair(&tower, normal, &i_set, &j_set, radius)?;
            let bundle = Bundle {
                field: Some(FieldDesc::from_tower(&tower)),
                skew: Some(SkewSpec { q: Some(q), m, s, normal, i_set, j_set }),
                code: Some(CodeDesc::from_ext(&tower, pair.c())),
                pair: Some(PairDesc::from_ext_pair(&tower, &pair)),
                ..Bundle::default()
            };
            write_output(&io, &bundle)?;
            Ok(Outcome::Done)
        }

        Cmd::Encode { message, io } => {
            let mut bundle = read_bundle(&io)?;
            let msg = message
                .or_else(|| bundle.message.clone())
                .ok_or_else(|| Invalid("no message: pass --message or bundle one".into()))?;
            let code = bundle
                .code
                .as_ref()
                .ok_or_else(|| Invalid("the bundle carries no code".into()))?;
            let codeword = match code.kind {
                CodeKind::Ext => {
                    let (tower, ext) = code.to_ext()?;
                    WordDesc::Vector(ext.encode(tower.mid(), &msg)?)
                }
                CodeKind::Matrix => {
                    let (tower, mc) = code.to_matrix()?;
                    WordDesc::from_mat(&encode_matrix(&tower, &mc, &msg)?)
                }
            };
            bundle.message = Some(msg);
            bundle.codeword = Some(codeword);
            write_output(&io, &bundle)?;
            Ok(Outcome::Done)
        }

        Cmd::Corrupt { rank, seed, io } => {
            let mut bundle = read_bundle(&io)?;
            let tower = tower_of(&bundle)?;
            let codeword = bundle
                .codeword
                .clone()
                .ok_or_else(|| Invalid("the bundle carries no codeword".into()))?;
            let mut rng = stream_rng(seed, "corrupt");
            match codeword {
                WordDesc::Vector(cw) => {
                    let e = random_rank_error_ext(&tower, cw.len(), rank, &mut rng)?;
                    let f = tower.mid();
                    let received: Vec<El> =
                        cw.iter().zip(&e).map(|(&c, &x)| f.add(c, x)).collect();
                    bundle.error = Some(WordDesc::Vector(e));
                    bundle.received = Some(WordDesc::Vector(received));
                }
                WordDesc::Matrix(_) => {
                    let cw = codeword.to_mat()?;
                    let f = tower.base();
                    let e = random_rank_error(f, cw.rows(), cw.cols(), rank, &mut rng)?;
                    bundle.received = Some(WordDesc::from_mat(&cw.add(f, &e)?));
                    bundle.error = Some(WordDesc::from_mat(&e));
                }
            }
            bundle.seed = Some(seed);
            write_output(&io, &bundle)?;
            Ok(Outcome::Done)
        }

        Cmd::Decode { pair, io } => {
            let mut bundle = read_bundle(&io)?;
            let desc = pair_from(&pair, &bundle)?;
            let received = bundle
                .received
                .clone()
                .ok_or_else(|| Invalid("the bundle carries no received word".into()))?;
            let mut outcome = match desc.kind {
                PairKind::I => {
                    let (tower, pair) = desc.to_ext_pair()?;
                    let r = received.as_vector()?;
                    OutcomeDesc::from(&decode_ext(&tower, &pair, r)?)
                }
                PairKind::II => {
                    let tower = desc.a.field.to_tower()?;
                    let (_, pair) = desc.to_base_pair()?;
                    let r = match &received {
                        WordDesc::Matrix(_) => received.to_mat()?,
                        // vectors fold into the basis the type-II target uses
                        WordDesc::Vector(v) => mat_rep(&tower, v, Basis::AlphaPrime),
                    };
                    OutcomeDesc::from(&decode_base(tower.base(), &pair, &r)?)
                }
            };
            let mut negative = outcome.status != DecodeStatus::Success;
            if let (Some(original), Some(recovered)) = (&bundle.codeword, &outcome.codeword) {
                let tower = desc.a.field.to_tower()?;
                if !words_match(&tower, original, recovered)? {
                    outcome.reason =
                        Some("recovered codeword differs from the bundled original".into());
                    negative = true;
                }
            }
            bundle.outcome = Some(outcome);
            write_output(&io, &bundle)?;
            Ok(if negative { Outcome::Negative } else { Outcome::Done })
        }

        Cmd::ValidatePair { pair, io } => {
            // standalone use with --pair needs no bundle, but anything
            // actually supplied must still parse
            let text = read_input(&io)?;
            let mut bundle = if io.input.is_none() && text.trim().is_empty() {
                Bundle::default()
            } else {
                from_json(&text)?
            };
            let desc = pair_from(&pair, &bundle)?;
            let cert = match desc.kind {
                PairKind::I => {
                    let (tower, pair) = desc.to_ext_pair()?;
                    validate_ext_pair(&tower, &pair)?
                }
                PairKind::II => {
                    let tower = desc.a.field.to_tower()?;
                    let (_, pair) = desc.to_base_pair()?;
                    validate_base_pair(tower.base(), &pair)?
                }
            };
            let claim_holds = match desc.grade.unwrap_or(PairGrade::Correcting) {
                PairGrade::Correcting => cert.correcting,
                PairGrade::Locating => cert.locating,
            };
            if bundle.pair.is_none() {
                bundle.pair = Some(desc);
            }
            bundle.certificate = Some(cert);
            write_output(&io, &bundle)?;
            Ok(if claim_holds { Outcome::Done } else { Outcome::Negative })
        }

        Cmd::Distance { brute: _, io } => {
            let mut bundle = read_bundle(&io)?;
            let code = bundle
                .code
                .as_ref()
                .ok_or_else(|| Invalid("the bundle carries no code".into()))?;
            let d = match code.kind {
                CodeKind::Ext => {
                    let (tower, ext) = code.to_ext()?;
                    ext.min_rank_distance(&tower)?
                }
                CodeKind::Matrix => {
                    let (tower, mc) = code.to_matrix()?;
                    mc.min_rank_distance(tower.base())?
                }
            };
            bundle.distance = Some(d);
            write_output(&io, &bundle)?;
            Ok(Outcome::Done)
        }

        Cmd::Bounds { name, a, b, c, delta, w, io } => {
            let bundle = read_bundle(&io)?;
            let report = match name.as_str() {
                "singleton" => {
                    let code = bundle
                        .code
                        .as_ref()
                        .ok_or_else(|| Invalid("the bundle carries no code".into()))?;
                    let (tower, mc) = matrix_form(code)?;
                    singleton_sum(tower.base(), &mc)?
                }
                "rank-ht" => {
                    let spec = bundle
                        .skew
                        .as_ref()
                        .ok_or_else(|| Invalid("rank-ht needs a skew spec in the bundle".into()))?;
                    let tower = FieldTower::new(spec.q.unwrap_or(2), spec.m, None)?
                        .with_top_level(spec.s, None)?;
                    rank_ht_bound(&tower, spec.normal, &spec.i_set, b, c, delta, w)?
                }
                _ => {
                    let desc = bundle
                        .pair
                        .as_ref()
                        .ok_or_else(|| Invalid("this bound needs a pair in the bundle".into()))?;
                    let (tower, bp) = match desc.kind {
                        PairKind::II => desc.to_base_pair()?,
                        PairKind::I => {
                            let (tower, pair) = desc.to_ext_pair()?;
                            let bp = convert_pair(&tower, &pair)?;
                            (tower, bp)
                        }
                    };
                    let f = tower.base();
                    match name.as_str() {
                        "product" => bound_product(f, bp.a(), bp.b(), bp.c(), a, b)?,
                        "dual-product" => bound_dual_product(f, bp.a(), bp.b(), bp.c(), b, c)?,
                        "roos" => roos_bound(f, bp.a(), bp.b(), bp.c(), a, b)?,
                        _ => unreachable!("clap restricts the name"),
                    }
                }
            };
            let verified = report.verified;
            write_output(&io, &report)?;
            Ok(if verified { Outcome::Done } else { Outcome::Negative })
        }

        Cmd::ConvertPair { io } => {
            let mut bundle = read_bundle(&io)?;
            let desc = bundle
                .pair
                .clone()
                .ok_or_else(|| Invalid("the bundle carries no pair".into()))?;
            if desc.kind != PairKind::I {
                return Err(Invalid("convert-pair expects a type-I pair".into()));
            }
            let (tower, pair) = desc.to_ext_pair()?;
            let base = convert_pair(&tower, &pair)?;
            let mut bdesc = PairDesc::from_base_pair(&tower, &base);
            bdesc.a.basis_used = Some(Basis::Alpha);
            bdesc.b.basis_used = Some(Basis::Alpha);
            bdesc.c.basis_used = Some(Basis::AlphaPrime);
            bundle.pair = Some(bdesc);
            write_output(&io, &bundle)?;
            Ok(Outcome::Done)
        }

        Cmd::HammingDemo { io } => {
            let (report, clean) = hamming_demo()?;
            write_output(&io, &report)?;
            Ok(if clean { Outcome::Done } else { Outcome::Negative })
        }
    }
}

fn encode_matrix(tower: &FieldTower, code: &MatrixCode, msg: &[El]) -> Result<Mat, recp::Error> {
    if msg.len() != code.dim_fq() {
        return Err(recp::Error::Parameter(format!(
            "message length {} does not match code dimension {}",
            msg.len(),
            code.dim_fq()
        )));
    }
    let f = tower.base();
    let mut acc = Mat::zero(code.rows_m(), code.cols_n());
    for (mat, &coef) in code.basis_matrices().iter().zip(msg) {
        acc = acc.add(f, &mat.scale(f, coef))?;
    }
    Ok(acc)
}

/// Compare a bundled codeword with a decoded one, folding an extension
/// vector to its matrix form when the decoder worked on the matrix side.
fn words_match(tower: &FieldTower, original: &WordDesc, recovered: &WordDesc) -> Result<bool, Invalid> {
    Ok(match (original, recovered) {
        (WordDesc::Vector(a), WordDesc::Vector(b)) => a == b,
        (WordDesc::Matrix(_), WordDesc::Matrix(_)) => {
            original.to_mat()? == recovered.to_mat()?
        }
        (WordDesc::Vector(v), WordDesc::Matrix(_)) => {
            mat_rep(tower, v, Basis::AlphaPrime) == recovered.to_mat()?
        }
        (WordDesc::Matrix(_), WordDesc::Vector(v)) => {
            original.to_mat()? == mat_rep(tower, v, Basis::AlphaPrime)
        }
    })
}

fn matrix_form(code: &CodeDesc) -> Result<(FieldTower, MatrixCode), Invalid> {
    Ok(match code.kind {
        CodeKind::Matrix => code.to_matrix()?,
        CodeKind::Ext => {
            let (tower, ext) = code.to_ext()?;
            let mc = to_matrix_code(&tower, &ext, Basis::Alpha)?;
            (tower, mc)
        }
    })
}

#[derive(Serialize)]
struct DemoSweep {
    patterns: usize,
    successes: usize,
    classical_agreements: usize,
}

#[derive(Serialize)]
struct DemoReport {
    q: u64,
    n: usize,
    t: usize,
    dim_a: usize,
    dim_b: usize,
    dim_c: usize,
    d_c: usize,
    embedded_rows: usize,
    embedded_cols: usize,
    sweep: DemoSweep,
    example_received: Vec<El>,
    example: OutcomeDesc,
}

/// Every error of Hamming weight up to 2 on one codeword of the [7,3,5]
/// demo code, decoded through the diagonal embedding and cross-checked
/// against the direct classical decoder.
fn hamming_demo() -> Result<(DemoReport, bool), Invalid> {
    let (f, pair) = grs_demo_pair()?;
    let n = pair.n();
    let cw = pair.c().codeword_at(&f, 5);

    let mut patterns = Vec::new();
    for i in 0..n {
        for v in 1..f.order() {
            patterns.push(vec![(i, v)]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for v in 1..f.order() {
                for u in 1..f.order() {
                    patterns.push(vec![(i, v), (j, u)]);
                }
            }
        }
    }

    let mut successes = 0;
    let mut agreements = 0;
    for pat in &patterns {
        let mut r = cw.clone();
        for &(i, v) in pat {
            r[i] = f.add(r[i], v);
        }
        let out = decode_hamming(&f, &pair, &r)?;
        let direct = decode_hamming_classical(&f, &pair, &r)?;
        if out.status == DecodeStatus::Success && out.codeword.as_deref() == Some(&cw[..]) {
            successes += 1;
        }
        if out == direct {
            agreements += 1;
        }
    }

    let mut example_received = cw.clone();
    example_received[1] = f.add(example_received[1], 3);
    example_received[4] = f.add(example_received[4], 6);
    let example = OutcomeDesc::from(&decode_hamming(&f, &pair, &example_received)?);

    let total = patterns.len();
    let clean = successes == total && agreements == total;
    let report = DemoReport {
        q: f.order(),
        n,
        t: pair.radius(),
        dim_a: pair.a().dim(),
        dim_b: pair.b().dim(),
        dim_c: pair.c().dim(),
        d_c: pair.dist_c(),
        embedded_rows: pair.embedded().rows_m(),
        embedded_cols: pair.embedded().cols_n(),
        sweep: DemoSweep { patterns: total, successes, classical_agreements: agreements },
        example_received,
        example,
    };
    Ok((report, clean))
}
