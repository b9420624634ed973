//! Browser bindings for the static demo page in `www/`.
//!
//! Each export returns plain text so the page can drop it into a `<pre>` or
//! split it into table rows; errors come back as a line starting with `error:`.

use std::fmt::Write as _;

use liemult::catalog::{self, Family};
use liemult::classifier::{classify, fingerprint, Status};
use liemult::lieconst;
use liemult::multiplier::{check_kunneth, schur_multiplier_dim};
use wasm_bindgen::prelude::*;

fn or_error(r: Result<String, String>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

/// Fingerprint and classification of a `lieconst` document.
pub fn analyze_text(text: &str) -> Result<String, String> {
    let l = lieconst::parse(text).map_err(|e| e.to_string())?;
    let fp = fingerprint(&l).map_err(|e| e.to_string())?;
    let r = schur_multiplier_dim(&l).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let _ = writeln!(out, "{fp}");
    let _ = writeln!(out, "rank_d2={} rank_d3={}", r.rank_d2, r.rank_d3);
    match classify(&l) {
        Ok(c) if c.status == Status::Classified => {
            let _ = writeln!(out, "family={} params={} ({})", c.family_id(), c.params_string(), c.notes);
        }
        Ok(c) => {
            let _ = writeln!(out, "status={} ({})", c.status, c.notes);
        }
        Err(e) => {
            let _ = writeln!(out, "classification skipped: {e}");
        }
    }
    Ok(out)
}

/// Rows `m,k,n,dimM,s` for `H(m) ⊕ A(k)`, computed by homology.
pub fn heisenberg_grid_rows(max_m: usize, max_k: usize) -> Result<String, String> {
    let mut out = String::from("m,k,n,dimM,s\n");
    for m in 1..=max_m {
        for k in 0..=max_k {
            let e = catalog::heisenberg_plus_abelian(m, k).ok_or("m must be positive")?;
            let r = schur_multiplier_dim(&e.algebra).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "{m},{k},{},{},{}", r.n, r.dim_m, r.s);
        }
    }
    Ok(out)
}

/// Both sides of the direct-sum formula for two `lieconst` documents.
pub fn kunneth_text(a: &str, b: &str) -> Result<String, String> {
    let la = lieconst::parse(a).map_err(|e| format!("first algebra: {e}"))?;
    let lb = lieconst::parse(b).map_err(|e| format!("second algebra: {e}"))?;
    let c = check_kunneth(&la, &lb).map_err(|e| e.to_string())?;
    Ok(format!(
        "dim M(L1+L2) = {}\ndim M(L1) + dim M(L2) + dim(L1/L1^2 x L2/L2^2) = {} + {} + {} = {}\nholds={}\n",
        c.lhs, c.dim_m1, c.dim_m2, c.tensor, c.rhs, c.holds
    ))
}

/// `lieconst` text for a catalog family, e.g. `("HplusA", "2 1")`.
pub fn catalog_document(name: &str, params: &str) -> Result<String, String> {
    let family: Family = name.parse().map_err(|e: catalog::UnknownFamily| e.to_string())?;
    let params: Vec<usize> = params
        .split_whitespace()
        .map(|p| p.parse().map_err(|_| format!("invalid parameter `{p}`")))
        .collect::<Result<_, _>>()?;
    let entry = family
        .entry(&params)
        .ok_or_else(|| format!("{family} takes {} parameter(s) > 0", family.arity()))?;
    Ok(lieconst::render(&entry.algebra))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    or_error(analyze_text(text))
}

#[wasm_bindgen]
pub fn heisenberg_grid(max_m: usize, max_k: usize) -> String {
    or_error(heisenberg_grid_rows(max_m, max_k))
}

#[wasm_bindgen]
pub fn kunneth(a: &str, b: &str) -> String {
    or_error(kunneth_text(a, b))
}

#[wasm_bindgen]
pub fn catalog_text(name: &str, params: &str) -> String {
    or_error(catalog_document(name, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_l3414() {
        let out = analyze("dim 4\n[e1,e2] = e3\n[e1,e3] = e4\n");
        assert!(out.starts_with("n=4 dimL2=2 dimZ=1 class=3"));
        assert!(out.contains("family=L3414"));
    }

    #[test]
    fn analyze_reports_errors() {
        assert!(analyze("dim 3\n[e1,e2] = e9\n").starts_with("error:"));
        assert!(analyze("dim 2\n").contains("classification skipped"));
    }

    #[test]
    fn grid_rows() {
        let g = heisenberg_grid(2, 1);
        assert_eq!(g, "m,k,n,dimM,s\n1,0,3,2,0\n1,1,4,4,0\n2,0,5,5,2\n2,1,6,9,2\n");
    }

    #[test]
    fn kunneth_output() {
        let out = kunneth("dim 3\n[e1,e2] = e3\n", "dim 2\n");
        assert!(out.contains("= 2 + 1 + 4 = 7"));
        assert!(out.ends_with("holds=true\n"));
    }

    #[test]
    fn catalog_documents() {
        assert_eq!(catalog_text("H", "1"), "dim 3\n[e1,e2] = e3\n");
        assert!(catalog_text("H", "0").starts_with("error:"));
        assert!(catalog_text("Q", "").starts_with("error:"));
    }
}
