//! Gervais curves on the surface S_{g,b} and their pairwise intersection table.
//!
//! The curve system is purely combinatorial: curves are named (`Alpha`,
//! `Beta`, `Gamma`) and the intersection counts come from fixed incidence
//! rules, not from embedded curve geometry. The audit in
//! [`validate_incidence`] is the contract; the rules themselves are the
//! documented defaults.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CurveError;

/// Surface parameters: genus `g` and number of punctures/boundary components `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceSpec {
    /// A spec usable by every operation, including the presentation (`g >= 5`).
    pub fn new(genus: u32, punctures: u32) -> Result<Self, CurveError> {
        let spec = Self { genus, punctures };
        spec.validate_for_presentation()?;
        Ok(spec)
    }

    /// Accepts low genus (`g >= 2`): curve enumeration and incidence still
    /// work, but presentation-level operations will reject the spec.
    pub fn new_low_genus(genus: u32, punctures: u32) -> Result<Self, CurveError> {
        if genus < 2 {
            return Err(CurveError::GenusTooSmall { genus, min: 2 });
        }
        Ok(Self { genus, punctures })
    }

    pub fn validate_for_presentation(&self) -> Result<(), CurveError> {
        if self.genus < 5 {
            return Err(CurveError::GenusTooSmall {
                genus: self.genus,
                min: 5,
            });
        }
        Ok(())
    }

    /// Number of alpha curves: 2g + b - 2.
    pub fn alpha_count(&self) -> u32 {
        2 * self.genus + self.punctures - 2
    }

    /// Number of beta curves: g.
    pub fn beta_count(&self) -> u32 {
        self.genus
    }

    /// Number of gamma curves: one per unordered pair of alpha indices.
    pub fn gamma_count(&self) -> u32 {
        let a = self.alpha_count();
        a * (a - 1) / 2
    }

    pub fn curve_count(&self) -> usize {
        (self.alpha_count() + self.beta_count() + self.gamma_count()) as usize
    }
}

/// A Gervais curve. Gamma indices are an unordered pair of distinct alpha
/// indices, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CurveId {
    Alpha(u32),
    Beta(u32),
    Gamma(u32, u32),
}

impl CurveId {
    pub fn gamma(i: u32, j: u32) -> CurveId {
        assert!(i != j, "gamma indices must be distinct");
        if i < j {
            CurveId::Gamma(i, j)
        } else {
            CurveId::Gamma(j, i)
        }
    }

    pub fn is_beta(&self) -> bool {
        matches!(self, CurveId::Beta(_))
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveId::Alpha(i) => write!(f, "alpha_{i}"),
            CurveId::Beta(j) => write!(f, "beta_{j}"),
            CurveId::Gamma(i, j) => write!(f, "gamma_{i}_{j}"),
        }
    }
}

/// All Gervais curves in canonical order: alphas by index, betas by index,
/// gammas lexicographic.
pub fn enumerate_curves(spec: &SurfaceSpec) -> Vec<CurveId> {
    let mut out = Vec::with_capacity(spec.curve_count());
    for i in 1..=spec.alpha_count() {
        out.push(CurveId::Alpha(i));
    }
    for j in 1..=spec.beta_count() {
        out.push(CurveId::Beta(j));
    }
    for i in 1..=spec.alpha_count() {
        for j in (i + 1)..=spec.alpha_count() {
            out.push(CurveId::Gamma(i, j));
        }
    }
    out
}

/// Symmetric intersection-count table over the canonical curve order.
///
/// Entries are 0, 1, or 2 (2 stands for "2 or more"); the diagonal is 0.
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceTable {
    spec: SurfaceSpec,
    curves: Vec<CurveId>,
    index: BTreeMap<CurveId, usize>,
    /// Row-major dense counts, `curves.len() x curves.len()`.
    counts: Vec<u8>,
}

impl IncidenceTable {
    pub fn spec(&self) -> &SurfaceSpec {
        &self.spec
    }

    pub fn curves(&self) -> &[CurveId] {
        &self.curves
    }

    pub fn index_of(&self, c: CurveId) -> Result<usize, CurveError> {
        self.index
            .get(&c)
            .copied()
            .ok_or(CurveError::UnknownCurve(c))
    }

    pub fn intersection(&self, a: CurveId, b: CurveId) -> Result<u8, CurveError> {
        let ia = self.index_of(a)?;
        let ib = self.index_of(b)?;
        Ok(self.counts[ia * self.curves.len() + ib])
    }

    pub fn intersection_by_index(&self, ia: usize, ib: usize) -> u8 {
        self.counts[ia * self.curves.len() + ib]
    }

    /// Beta curves meeting `c` (at least once). Empty for beta curves.
    pub fn beta_neighbors(&self, c: CurveId) -> Result<Vec<CurveId>, CurveError> {
        let ic = self.index_of(c)?;
        let mut out = Vec::new();
        for (j, &other) in self.curves.iter().enumerate() {
            if other.is_beta() && other != c && self.counts[ic * self.curves.len() + j] > 0 {
                out.push(other);
            }
        }
        Ok(out)
    }

    /// Test-support constructor for deliberately broken tables.
    #[doc(hidden)]
    pub fn with_forced_entry(mut self, a: CurveId, b: CurveId, count: u8) -> Self {
        let ia = self.index[&a];
        let ib = self.index[&b];
        let n = self.curves.len();
        self.counts[ia * n + ib] = count;
        self.counts[ib * n + ia] = count;
        self
    }

    /// Serializes to the documented JSON shape:
    /// `{"genus", "punctures", "curves", "incidence"}` with row-major counts
    /// in canonical curve order.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.curves.len();
        let rows: Vec<Vec<u8>> = (0..n)
            .map(|i| self.counts[i * n..(i + 1) * n].to_vec())
            .collect();
        serde_json::json!({
            "genus": self.spec.genus,
            "punctures": self.spec.punctures,
            "curves": self.curves.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "incidence": rows,
        })
    }
}

/// Incidence rules:
/// - alphas are pairwise disjoint (meridians);
/// - beta_1 meets every alpha once (longitude of the central torus);
/// - beta_k (k >= 2) meets exactly alpha_{2k-3} and alpha_{2k-2}, once each;
/// - betas are pairwise disjoint;
/// - gamma_{ij} meets alpha_i and alpha_j once, no other alpha;
/// - gamma_{ij} meets beta_1 once and no other beta;
/// - gamma_{ij} and gamma_{kl} meet once iff the index pairs share exactly
///   one index.
pub fn build_incidence(spec: &SurfaceSpec) -> Result<IncidenceTable, CurveError> {
    let curves = enumerate_curves(spec);
    let n = curves.len();
    let index: BTreeMap<CurveId, usize> = curves.iter().copied().zip(0..).collect();
    let mut counts = vec![0u8; n * n];

    let set = |a: usize, b: usize, v: u8, counts: &mut Vec<u8>| {
        counts[a * n + b] = v;
        counts[b * n + a] = v;
    };

    for (ia, &a) in curves.iter().enumerate() {
        for (ib, &b) in curves.iter().enumerate().skip(ia + 1) {
            let v = pair_count(a, b);
            if v > 0 {
                set(ia, ib, v, &mut counts);
            }
        }
    }

    let table = IncidenceTable {
        spec: *spec,
        curves,
        index,
        counts,
    };

    // Basic structural invariants hold for every genus >= 2; a violation here
    // is a bug in the rules above, not a property of the surface.
    let basic = audit_basic(&table);
    if !basic.pass {
        return Err(CurveError::InvariantViolation(
            basic.violations.join("; "),
        ));
    }
    Ok(table)
}

fn pair_count(a: CurveId, b: CurveId) -> u8 {
    use CurveId::*;
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a, b) {
        (Alpha(_), Alpha(_)) => 0,
        (Alpha(i), Beta(k)) | (Beta(k), Alpha(i)) => {
            if k == 1 || i == 2 * k - 3 || i == 2 * k - 2 {
                1
            } else {
                0
            }
        }
        (Beta(_), Beta(_)) => 0,
        (Alpha(i), Gamma(p, q)) => {
            if i == p || i == q {
                1
            } else {
                0
            }
        }
        (Beta(k), Gamma(_, _)) => {
            if k == 1 {
                1
            } else {
                0
            }
        }
        (Gamma(p, q), Gamma(r, s)) => {
            let shared = [(p == r), (p == s), (q == r), (q == s)]
                .iter()
                .filter(|&&x| x)
                .count();
            if shared == 1 {
                1
            } else {
                0
            }
        }
        _ => unreachable!("pairs are ordered"),
    }
}

/// Pass/fail audit with the violations as data.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditReport {
    pub pass: bool,
    pub violations: Vec<String>,
}

fn audit_basic(t: &IncidenceTable) -> AuditReport {
    let mut violations = Vec::new();
    let n = t.curves.len();
    for i in 0..n {
        if t.counts[i * n + i] != 0 {
            violations.push(format!("nonzero diagonal entry for {}", t.curves[i]));
        }
        for j in (i + 1)..n {
            if t.counts[i * n + j] != t.counts[j * n + i] {
                violations.push(format!(
                    "asymmetric entry for ({}, {})",
                    t.curves[i], t.curves[j]
                ));
            }
        }
    }
    for &a in &t.curves {
        if let CurveId::Beta(_) = a {
            for &b in &t.curves {
                if b.is_beta() && a != b && t.intersection(a, b).unwrap() != 0 {
                    violations.push(format!("beta curves {a} and {b} intersect"));
                }
            }
        }
        let nb = t.beta_neighbors(a).unwrap();
        if nb.len() > 2 {
            violations.push(format!(
                "{a} meets {} beta curves: {:?}",
                nb.len(),
                nb.iter().map(|c| c.to_string()).collect::<Vec<_>>()
            ));
        }
    }
    AuditReport {
        pass: violations.is_empty(),
        violations,
    }
}

/// Full audit: structural invariants plus the star-support condition (every
/// star support must miss at least one beta curve). The latter is what fails
/// for genus 4.
pub fn validate_incidence(t: &IncidenceTable, spec: &SurfaceSpec) -> AuditReport {
    let mut report = audit_basic(t);
    if *t.spec() != *spec {
        report.violations.push("table spec mismatch".to_string());
    }

    let a_count = spec.alpha_count();
    'triples: for i in 1..=a_count {
        for j in (i + 1)..=a_count {
            for k in (j + 1)..=a_count {
                let support = [
                    CurveId::Alpha(i),
                    CurveId::Alpha(j),
                    CurveId::Alpha(k),
                    CurveId::Beta(1),
                    CurveId::gamma(i, j),
                    CurveId::gamma(j, k),
                    CurveId::gamma(i, k),
                ];
                let mut found = false;
                for b in 1..=spec.beta_count() {
                    let beta = CurveId::Beta(b);
                    if support.iter().all(|&c| {
                        c != beta && t.intersection(beta, c).map(|v| v == 0).unwrap_or(false)
                    }) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    report.violations.push(format!(
                        "star support {{alpha_{i}, alpha_{j}, alpha_{k}}} meets every beta curve"
                    ));
                    // One witness per audit keeps g=4 reports readable.
                    break 'triples;
                }
            }
        }
    }

    report.pass = report.violations.is_empty();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_counts_g5_b0() {
        let spec = SurfaceSpec::new(5, 0).unwrap();
        assert_eq!(spec.alpha_count(), 8);
        assert_eq!(spec.beta_count(), 5);
        assert_eq!(spec.gamma_count(), 28);
        let curves = enumerate_curves(&spec);
        assert_eq!(curves.len(), 41);
        assert_eq!(curves[0], CurveId::Alpha(1));
        assert_eq!(*curves.last().unwrap(), CurveId::Gamma(7, 8));
    }

    #[test]
    fn curve_counts_g5_b3() {
        let spec = SurfaceSpec::new(5, 3).unwrap();
        assert_eq!(spec.alpha_count(), 11);
        assert_eq!(spec.beta_count(), 5);
        assert_eq!(spec.gamma_count(), 55);
    }

    #[test]
    fn incidence_examples() {
        let spec = SurfaceSpec::new(5, 0).unwrap();
        let t = build_incidence(&spec).unwrap();
        for i in 1..=8 {
            for j in (i + 1)..=8 {
                assert_eq!(
                    t.intersection(CurveId::Alpha(i), CurveId::Alpha(j)).unwrap(),
                    0
                );
            }
            assert_eq!(t.intersection(CurveId::Beta(1), CurveId::Alpha(i)).unwrap(), 1);
        }
        assert_eq!(t.intersection(CurveId::Beta(2), CurveId::Beta(5)).unwrap(), 0);
    }

    #[test]
    fn beta_neighbor_bounds() {
        let spec = SurfaceSpec::new(6, 2).unwrap();
        let t = build_incidence(&spec).unwrap();
        assert!(t.beta_neighbors(CurveId::Beta(3)).unwrap().is_empty());
        assert!(t.beta_neighbors(CurveId::Alpha(1)).unwrap().len() <= 2);
        for &c in t.curves() {
            assert!(t.beta_neighbors(c).unwrap().len() <= 2, "curve {c}");
        }
    }

    #[test]
    fn audit_passes_for_supported_range() {
        for g in 5..=12 {
            for b in 0..=6 {
                let spec = SurfaceSpec::new(g, b).unwrap();
                let t = build_incidence(&spec).unwrap();
                let report = validate_incidence(&t, &spec);
                assert!(report.pass, "g={g} b={b}: {:?}", report.violations);
            }
        }
    }

    #[test]
    fn forced_beta_intersection_fails_audit() {
        let spec = SurfaceSpec::new(5, 0).unwrap();
        let t = build_incidence(&spec)
            .unwrap()
            .with_forced_entry(CurveId::Beta(1), CurveId::Beta(2), 1);
        let report = validate_incidence(&t, &spec);
        assert!(!report.pass);
        assert!(report.violations.iter().any(|v| v.contains("beta")));
    }

    #[test]
    fn genus_four_fails_star_support() {
        let spec = SurfaceSpec::new_low_genus(4, 0).unwrap();
        let t = build_incidence(&spec).unwrap();
        let report = validate_incidence(&t, &spec);
        assert!(!report.pass);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("star support")));
    }

    #[test]
    fn rebuild_is_deterministic() {
        let spec = SurfaceSpec::new(7, 1).unwrap();
        assert_eq!(build_incidence(&spec).unwrap(), build_incidence(&spec).unwrap());
    }

    #[test]
    fn unknown_curve_lookup_errors() {
        let spec = SurfaceSpec::new(5, 0).unwrap();
        let t = build_incidence(&spec).unwrap();
        assert!(t.beta_neighbors(CurveId::Beta(9)).is_err());
    }
}
