//! Serializable result shapes. Field order is the emitted key order, so
//! keep it stable: golden files depend on it.

use serde::Serialize;
use sl2fd_core::exactpoly::{rat_to_string, Poly, Rat};

#[derive(Serialize)]
pub struct CheckOut {
    pub name: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub rep: String,
    pub delta: String,
    pub n: u32,
    pub deg: usize,
    pub checks: Vec<CheckOut>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct SpectrumOut {
    pub delta: String,
    pub kmax: usize,
    pub lambda: Vec<String>,
}

#[derive(Serialize)]
pub struct EntryOut {
    pub k: usize,
    pub lambda: String,
    pub poly: Vec<String>,
}

#[derive(Serialize)]
pub struct EigenpolyOut {
    pub rep: String,
    pub kmax: usize,
    pub entries: Vec<EntryOut>,
}

#[derive(Serialize)]
pub struct FamilyOut {
    pub k: usize,
    pub lambda: String,
    pub poly: Vec<String>,
}

#[derive(Serialize)]
pub struct FactorOut {
    pub name: String,
    pub k: usize,
    pub quotient: Vec<String>,
    pub remainder: Vec<String>,
}

#[derive(Serialize)]
pub struct IsospectralOut {
    pub kmax: usize,
    pub diagonal: Vec<String>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct RootOut {
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize)]
pub struct QesOut {
    pub n: u32,
    pub charpoly: Vec<String>,
    pub roots: Vec<RootOut>,
    pub isospectral: bool,
    pub three_point: bool,
}

#[derive(Serialize)]
pub struct ErrorOut {
    pub error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Coefficient strings, lowest degree first; the zero polynomial is [].
pub fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rat_to_string).collect()
}

pub fn rat_strings(rs: &[Rat]) -> Vec<String> {
    rs.iter().map(rat_to_string).collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output shapes serialize")
}
