//! Golden serializations of the rank-1 resolutions: guards both the
//! resolution computation and the JSON encoding against silent drift.
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p pervpn --test golden`.

use std::fs;
use std::path::PathBuf;

use pervpn::heart::{Heart, ObjectId};
use pervpn::json::ComplexDto;
use pervpn::Q;

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn slug(id: ObjectId) -> String {
    match id {
        ObjectId::Projective(k) => format!("p{k}"),
        ObjectId::Simple(k) => format!("ic{k}"),
        ObjectId::Injective(k) => format!("i{k}"),
        ObjectId::Standard(k) => format!("delta{k}"),
        ObjectId::Costandard(k) => format!("nabla{k}"),
        ObjectId::StringPlus(a, b) => format!("zplus_{a}_{b}"),
        ObjectId::StringMinus(a, b) => format!("zminus_{a}_{b}"),
    }
}

#[test]
fn rank_one_resolutions_match_golden_files() {
    let heart = Heart::<Q>::new(1);
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for id in heart.census() {
        let dto = ComplexDto::from_complex(&heart.resolution(id));
        let text = serde_json::to_string_pretty(&dto).unwrap() + "\n";
        let name = format!("resolution_n1_{}.json", slug(id));
        let path = golden_path(&name);
        if update {
            fs::write(&path, &text).unwrap();
        }
        let want = fs::read_to_string(&path).unwrap_or_else(|e| {
            panic!("missing golden file {name}: {e}; rerun with UPDATE_GOLDEN=1")
        });
        assert_eq!(
            text, want,
            "golden mismatch for {name}; rerun with UPDATE_GOLDEN=1 if the change is intended"
        );
    }
}
