//! Every shipped example file must round-trip parse -> serialize -> parse
//! to an equal descriptor, and the semantic objects must rebuild from it.

use std::fs;
use std::path::PathBuf;

use recp::json::{from_json, to_json, Bundle, FieldDesc, PairDesc, PolyDesc};

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn round_trip<T>(text: &str) -> Option<T>
where
    T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug,
{
    let first: T = from_json(text).ok()?;
    let reprinted = to_json(&first).expect("serializable");
    let second: T = from_json(&reprinted).expect("own output must parse");
    assert_eq!(first, second);
    Some(first)
}

#[test]
fn every_shipped_file_round_trips() {
    let mut seen = 0;
    for entry in fs::read_dir(fixture_dir()).expect("fixtures directory") {
        let path = entry.expect("dir entry").path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        seen += 1;
        let text = fs::read_to_string(&path).expect("readable fixture");
        let classified = round_trip::<Bundle>(&text).is_some()
            || round_trip::<PairDesc>(&text).is_some()
            || round_trip::<FieldDesc>(&text).is_some()
            || round_trip::<PolyDesc>(&text).is_some();
        assert!(classified, "unrecognized fixture {}", path.display());
    }
    assert!(seen >= 7, "fixtures missing: found {seen}");
}

#[test]
fn shipped_pairs_rebuild_and_certify() {
    let dir = fixture_dir();

    let text = fs::read_to_string(dir.join("pair_type1.json")).unwrap();
    let desc: PairDesc = from_json(&text).unwrap();
    let (t, pair) = desc.to_ext_pair().unwrap();
    let cert = recp::decoder::validate_ext_pair(&t, &pair).unwrap();
    assert!(cert.correcting, "shipped type-I pair must certify");

    let text = fs::read_to_string(dir.join("pair_type2.json")).unwrap();
    let desc: PairDesc = from_json(&text).unwrap();
    let (t, pair) = desc.to_base_pair().unwrap();
    let cert = recp::decoder::validate_base_pair(&t.base(), &pair).unwrap();
    assert!(cert.correcting, "shipped type-II pair must certify");
}

#[test]
fn shipped_received_word_still_decodes() {
    let text = fs::read_to_string(fixture_dir().join("received_rank1.json")).unwrap();
    let bundle: Bundle = from_json(&text).unwrap();
    let (t, pair) = bundle.pair.as_ref().unwrap().to_ext_pair().unwrap();
    let received = bundle.received.as_ref().unwrap().as_vector().unwrap();
    let out = recp::decoder::decode_ext(&t, &pair, received).unwrap();
    let codeword = bundle.codeword.as_ref().unwrap().as_vector().unwrap();
    assert_eq!(out.codeword.as_deref(), Some(codeword));
}
