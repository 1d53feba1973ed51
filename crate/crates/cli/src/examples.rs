//! The built-in gallery: ring fixtures and modules over the block matrix ring.

use grady_core::group::cyclic_group;
use grady_core::lpa::{lpa_z4, lpa_z8};
use grady_core::modules::{column_module, regular_module};
use grady_core::sc::fixtures::{
    dade6, group_ring_fixture, offdiagonal_z3_fixture, square_zero_fixture, trivial_fixture,
};
use grady_core::CoeffRing;
use serde_json::Value;

use crate::encode::{module_description, Encode};
use crate::error::{CliError, Result};

/// Name and one-line description of every example.
pub const GALLERY: [(&str, &str); 10] = [
    ("dade6", "3×3 block matrix ring over ℤ/6 with ideal entries 2ℤ/6, ℤ₂-graded"),
    ("lpa-z4", "Leavitt path algebra of v1 → v2 ← v3 plus an isolated v4 over ℤ/2, ℤ₄-graded"),
    ("lpa-z8", "Leavitt path algebra of a loop, a 2-cycle and an isolated vertex over ℤ/2, ℤ₈-graded"),
    ("group-ring", "group ring ℤ/2[ℤ₂]"),
    ("trivial", "ℤ/6 concentrated in degree 0 of ℤ₂"),
    ("square-zero", "ℤ/4 ⊕ x·ℤ/2 with x² = 0 in degree 1 of ℤ₂"),
    ("matrix-z3", "M₂(ℤ/2) with E12 in degree 1 and E21 in degree 2 of ℤ₃"),
    ("column", "module over dade6: columns (A, A, B)"),
    ("column-b", "module over dade6: columns (B, B, A)"),
    ("regular", "dade6 as a left module over itself"),
];

pub fn example(name: &str) -> Result<Value> {
    let z2 = || CoeffRing::zn(2).expect("ℤ/2");
    let z2g = || cyclic_group(2).expect("ℤ₂");
    Ok(match name {
        "dade6" => dade6().ring().description(),
        "lpa-z4" => lpa_z4(&z2()).description(),
        "lpa-z8" => lpa_z8(&z2()).description(),
        "group-ring" => group_ring_fixture(&z2(), &z2g())?.description(),
        "trivial" => trivial_fixture(&CoeffRing::zn(6)?, &z2g())?.description(),
        "square-zero" => square_zero_fixture().description(),
        "matrix-z3" => offdiagonal_z3_fixture().description(),
        "column" => module_description(&column_module(&dade6(), [false, false, true])?),
        "column-b" => module_description(&column_module(&dade6(), [true, true, false])?),
        "regular" => module_description(&regular_module(dade6().ring())),
        other => return Err(CliError::UnknownExample(other.to_string())),
    })
}
