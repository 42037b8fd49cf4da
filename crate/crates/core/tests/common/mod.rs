#![allow(dead_code)]

pub mod oracle;

use proptest::prelude::*;
use supersolve_core::generators::*;
use supersolve_core::{Arrangement, Matrix3};

/// Every fixture with at most eight lines.
pub fn small_fixtures() -> Vec<(String, Arrangement)> {
    let mut out = vec![
        ("paper_L".to_string(), paper_l()),
        ("pappus_P".to_string(), pappus_p()),
        ("fermat(2)".to_string(), fermat(2).unwrap()),
        (
            "fermat_extended(2)".to_string(),
            fermat_extended(2).unwrap(),
        ),
        ("B6".to_string(), boroczky(6).unwrap()),
        ("B7".to_string(), boroczky(7).unwrap()),
        ("B8".to_string(), boroczky(8).unwrap()),
    ];
    for d in 3..=7 {
        out.push((format!("near_pencil({d})"), near_pencil(d).unwrap()));
    }
    for d in 3..=6 {
        for seed in 0..2 {
            out.push((
                format!("generic({d},{seed})"),
                generic_arrangement(d, seed).unwrap(),
            ));
        }
    }
    out
}

/// Invertible integer matrices with small entries.
pub fn invertible_matrix() -> impl Strategy<Value = Matrix3> {
    prop::array::uniform3(prop::array::uniform3(-4i64..=4))
        .prop_map(Matrix3::from_ints)
        .prop_filter("singular", |m| !m.determinant().is_zero())
}
