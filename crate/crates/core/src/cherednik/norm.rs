use super::weights::{box_form, twisted_cell};
use crate::combinatorics::{Composition, StandardTableau};
use crate::scalars::{int, FactoredScalar, LinearForm};

fn pair_factor(r: u32, k: i64, bi: i64, bj: i64, ai: i64, aj: i64) -> FactoredScalar {
    let x = LinearForm::kappa(r).scale(&int(k))
        - LinearForm::d_diff(r, bi, bj)
        - LinearForm::c0(r).scale(&int(r as i64 * (ai - aj)));
    let rc0 = LinearForm::c0(r).scale(&int(r as i64));
    let den = FactoredScalar::from_form(&x).pow(2).expect("generic pair factor is nonzero");
    FactoredScalar::diff_of_squares(&x, &rc0).div(&den).expect("generic pair factor is nonzero")
}

/// ⟨f_{μ,T}, f_{μ,T}⟩ for ⟨v_T, v_T⟩₀ = 1, as a factored rational function.
pub fn norm(mu: &Composition, t: &StandardTableau) -> FactoredScalar {
    let r = t.r() as u32;
    let rr = r as i64;
    let n = mu.n();
    let cells: Vec<_> = (1..=n).map(|i| twisted_cell(mu, t, i)).collect();
    let a: Vec<i64> = cells.iter().map(|c| c.content()).collect();
    let b: Vec<i64> = cells.iter().map(|c| c.beta() as i64).collect();
    let m: Vec<i64> = mu.entries().iter().map(|&x| x as i64).collect();
    let mut out = FactoredScalar::one(r);
    for i in 0..n {
        for k in 1..=m[i] {
            out = out.mul(&FactoredScalar::from_form(&box_form(r, k, b[i], a[i])));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if m[i] > m[j] {
                for k in (1..=m[i] - m[j]).filter(|k| (k - (b[i] - b[j])).rem_euclid(rr) == 0) {
                    out = out.mul(&pair_factor(r, k, b[i], b[j], a[i], a[j]));
                }
            }
            if m[i] < m[j] - 1 {
                for k in (1..m[j] - m[i]).filter(|k| (k - (b[j] - b[i])).rem_euclid(rr) == 0) {
                    out = out.mul(&pair_factor(r, k, b[j], b[i], a[j], a[i]));
                }
            }
        }
    }
    out
}
