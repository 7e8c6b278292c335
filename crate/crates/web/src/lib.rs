//! Browser bindings: each export renders a table as plain text for the demo page.

use wasm_bindgen::prelude::*;

use icanon::canonical::{canonical_table as can_table, CanKind, Flavor};
use icanon::hecke::{kl_basis, Basis, HeckeParams};
use icanon::io::{can_text, kl_text, QuasiKDoc};
use icanon::iqg::quasi_k_rank1;
use icanon::qtensor::LetterDisplay;
use icanon::weyl::{group_order, parse_group, Kind};

/// Largest group or module the page will compute, to keep the tab responsive.
const MAX_ROWS: u64 = 2000;

pub fn render_kl(group: &str, k: i32) -> Result<String, String> {
    let (kind, rank) = parse_group(group).map_err(|e| e.to_string())?;
    if group_order(kind, rank) > MAX_ROWS {
        return Err(format!("{group} is too large for the browser demo"));
    }
    let params = match kind {
        Kind::B => HeckeParams::new(kind, rank, k),
        _ => HeckeParams::equal(kind, rank),
    };
    let table = kl_basis(params).map_err(|e| e.to_string())?;
    Ok(kl_text(&table))
}

/// `k < 0` selects the type A canonical basis, otherwise the i-canonical basis with `p = q^k`.
pub fn render_canonical(n: usize, m: usize, k: i32, dual: bool) -> Result<String, String> {
    if (n as u64).checked_pow(m as u32).is_none_or(|d| d > MAX_ROWS) {
        return Err(format!("N^m = {n}^{m} is too large for the browser demo"));
    }
    let flavor = if k < 0 { Flavor::A } else { Flavor::Iota(k) };
    let basis = if dual { Basis::L } else { Basis::C };
    let table = can_table(CanKind::new(flavor, basis), n, m).map_err(|e| e.to_string())?;
    Ok(can_text(&table, LetterDisplay::Half))
}

pub fn render_quasi_k(k: i32, d: usize) -> Result<String, String> {
    let coeffs = quasi_k_rank1(k, d).map_err(|e| e.to_string())?;
    Ok(QuasiKDoc::new(k, &coeffs).text())
}

#[wasm_bindgen]
pub fn kl_table(group: &str, k: i32) -> Result<String, JsValue> {
    render_kl(group, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn canonical_table(n: usize, m: usize, k: i32, dual: bool) -> Result<String, JsValue> {
    render_canonical(n, m, k, dual).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn quasi_k(k: i32, d: usize) -> Result<String, JsValue> {
    render_quasi_k(k, d).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kl_s3() {
        let out = render_kl("S3", 0).unwrap();
        assert!(out.contains("C_{s1 s2} = H_{s1 s2} + q H_{s1} + q H_{s2} + q^2 H_{e}"));
    }

    #[test]
    fn canonical_flavors() {
        assert!(render_canonical(2, 2, -1, false)
            .unwrap()
            .contains("b(1/2,-1/2) = v1/2⊗v-1/2 + q v-1/2⊗v1/2"));
        assert!(render_canonical(4, 1, 1, false).unwrap().contains("b(-1/2) = v-1/2 + q v1/2"));
        assert!(render_canonical(3, 1, 1, true).unwrap().contains("b(-1) = v-1 - q^-1 v1"));
    }

    #[test]
    fn limits() {
        assert!(render_kl("S8", 0).is_err());
        assert!(render_canonical(5, 5, -1, false).is_err());
        assert!(render_kl("Q2", 0).is_err());
    }

    #[test]
    fn quasi_k_starts_at_one() {
        assert!(render_quasi_k(1, 2).unwrap().contains("c_0 = 1\n"));
    }
}
