//! The Gervais presentation: one Dehn-twist generator per curve, with
//! commuting, braid, star, and degenerate-star relators, plus the common
//! commuter assignment for every relator.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::curves::{validate_incidence, CurveId, IncidenceTable, SurfaceSpec};
use crate::error::PresentationError;

/// Signed generator letter: `+(id+1)` for the twist, `-(id+1)` for its
/// inverse, so letter 0 never occurs.
pub type Letter = i32;

pub fn letter(id: usize, positive: bool) -> Letter {
    let l = (id + 1) as i32;
    if positive {
        l
    } else {
        -l
    }
}

pub fn generator_of(l: Letter) -> usize {
    (l.unsigned_abs() as usize) - 1
}

pub fn inverse(l: Letter) -> Letter {
    -l
}

/// Inverse of a word: reversed with every letter inverted.
pub fn invert_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&l| -l).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub id: usize,
    pub curve: CurveId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelatorKind {
    Commuting,
    Braid,
    Star,
    DegenerateStar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub kind: RelatorKind,
    /// Freely and cyclically reduced relator word.
    pub word: Vec<Letter>,
    /// Curves of the letters appearing in `word`, sorted, deduplicated.
    pub support: Vec<CurveId>,
}

/// Exactly the curves of the letters in the relator word.
pub fn relator_support(r: &Relator) -> &[CurveId] {
    &r.support
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GervaisPresentation {
    pub spec: SurfaceSpec,
    pub generators: Vec<Generator>,
    pub relators: Vec<Relator>,
    /// Relator index -> generator id of a beta twist commuting with every
    /// letter of the relator.
    pub commuter_map: Vec<usize>,
    /// Documents the star-relator convention used for X, Y, Z.
    pub star_convention: String,
    #[serde(skip)]
    classify: HashMap<Vec<Letter>, usize>,
    #[serde(skip)]
    curve_to_gen: HashMap<CurveId, usize>,
}

impl GervaisPresentation {
    pub fn generator_for(&self, c: CurveId) -> Option<usize> {
        self.curve_to_gen.get(&c).copied()
    }

    pub fn curve_of(&self, gen_id: usize) -> CurveId {
        self.generators[gen_id].curve
    }

    /// Matches `word` against the relators up to cyclic rotation and
    /// inversion. Returns the relator index.
    pub fn classify_cell(&self, word: &[Letter]) -> Option<usize> {
        if word.is_empty() {
            return None;
        }
        self.classify.get(&canonical_cyclic_key(word)).copied()
    }

    pub fn relator_kind_of(&self, word: &[Letter]) -> Option<RelatorKind> {
        self.classify_cell(word).map(|i| self.relators[i].kind)
    }

    /// Beta generator ids whose curve is disjoint from the curve of `f`,
    /// excluding `f` itself. These generate the abelian subgroup H_f used for
    /// strips.
    pub fn h_f_basis(&self, f: usize, t: &IncidenceTable) -> Vec<usize> {
        let curve = self.curve_of(f);
        self.generators
            .iter()
            .filter(|g| {
                g.curve.is_beta()
                    && g.id != f
                    && t.intersection(g.curve, curve).map(|v| v == 0).unwrap_or(false)
            })
            .map(|g| g.id)
            .collect()
    }

    /// All beta generator ids (the subgroup H).
    pub fn h_basis(&self) -> Vec<usize> {
        self.generators
            .iter()
            .filter(|g| g.curve.is_beta())
            .map(|g| g.id)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "genus": self.spec.genus,
            "punctures": self.spec.punctures,
            "star_convention": self.star_convention,
            "generators": self.generators.iter().map(|g| serde_json::json!({
                "id": g.id,
                "curve": g.curve.to_string(),
            })).collect::<Vec<_>>(),
            "relators": self.relators.iter().enumerate().map(|(i, r)| serde_json::json!({
                "kind": format!("{:?}", r.kind),
                "word": r.word,
                "support": r.support.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "commuter": self.commuter_map[i],
            })).collect::<Vec<_>>(),
        })
    }
}

/// Canonical key for a word class under cyclic rotation and inversion: the
/// lexicographically least rotation of the word and of its inverse.
fn canonical_cyclic_key(word: &[Letter]) -> Vec<Letter> {
    let mut best: Option<Vec<Letter>> = None;
    for w in [word.to_vec(), invert_word(word)] {
        for s in 0..w.len() {
            let mut rot = Vec::with_capacity(w.len());
            rot.extend_from_slice(&w[s..]);
            rot.extend_from_slice(&w[..s]);
            if best.as_ref().map(|b| rot < *b).unwrap_or(true) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn support_of_word(word: &[Letter], gens: &[Generator]) -> Vec<CurveId> {
    let mut support: Vec<CurveId> = word.iter().map(|&l| gens[generator_of(l)].curve).collect();
    support.sort();
    support.dedup();
    support
}

/// Builds the full presentation. Requires `g >= 5` and a passing incidence
/// audit.
pub fn build_presentation(
    spec: &SurfaceSpec,
    t: &IncidenceTable,
) -> Result<GervaisPresentation, PresentationError> {
    spec.validate_for_presentation()?;
    let audit = validate_incidence(t, spec);
    if !audit.pass {
        return Err(PresentationError::AuditFailed(audit.violations.join("; ")));
    }

    let generators: Vec<Generator> = t
        .curves()
        .iter()
        .enumerate()
        .map(|(id, &curve)| Generator { id, curve })
        .collect();
    let curve_to_gen: HashMap<CurveId, usize> =
        generators.iter().map(|g| (g.curve, g.id)).collect();

    let mut relators = Vec::new();
    let n = generators.len();

    // Commuting [A,B] and braid ABAB^-1A^-1B^-1 relators, one per unordered
    // generator pair, from the intersection count. A is the lower id.
    for a in 0..n {
        for b in (a + 1)..n {
            let inter = t.intersection_by_index(a, b);
            let (pa, pb) = (letter(a, true), letter(b, true));
            match inter {
                0 => relators.push(Relator {
                    kind: RelatorKind::Commuting,
                    word: vec![pa, pb, -pa, -pb],
                    support: support_of_word(&[pa, pb], &generators),
                }),
                1 => relators.push(Relator {
                    kind: RelatorKind::Braid,
                    word: vec![pa, pb, pa, -pb, -pa, -pb],
                    support: support_of_word(&[pa, pb], &generators),
                }),
                // "2+" intersections generate no relator.
                _ => {}
            }
        }
    }

    // Star relators (ABCD)^3 (XYZ)^-1 over unordered alpha triples i<j<k,
    // with D the beta_1 twist and X, Y, Z the twists about gamma_ij,
    // gamma_jk, gamma_ik.
    let a_count = spec.alpha_count();
    let d_gen = curve_to_gen[&CurveId::Beta(1)];
    for i in 1..=a_count {
        for j in (i + 1)..=a_count {
            for k in (j + 1)..=a_count {
                let a = letter(curve_to_gen[&CurveId::Alpha(i)], true);
                let b = letter(curve_to_gen[&CurveId::Alpha(j)], true);
                let c = letter(curve_to_gen[&CurveId::Alpha(k)], true);
                let d = letter(d_gen, true);
                let x = letter(curve_to_gen[&CurveId::gamma(i, j)], true);
                let y = letter(curve_to_gen[&CurveId::gamma(j, k)], true);
                let z = letter(curve_to_gen[&CurveId::gamma(i, k)], true);
                let mut word = Vec::with_capacity(15);
                for _ in 0..3 {
                    word.extend_from_slice(&[a, b, c, d]);
                }
                word.extend_from_slice(&[-z, -y, -x]);
                relators.push(Relator {
                    kind: RelatorKind::Star,
                    word: word.clone(),
                    support: support_of_word(&word, &generators),
                });
            }
        }
    }

    // Degenerate stars (A^2 C D)^3 (XY)^-1 for pairs {i,k}, i < k, treating
    // A = B as the alpha_i twist and X = Y as the gamma_ik twist.
    for i in 1..=a_count {
        for k in (i + 1)..=a_count {
            let a = letter(curve_to_gen[&CurveId::Alpha(i)], true);
            let c = letter(curve_to_gen[&CurveId::Alpha(k)], true);
            let d = letter(d_gen, true);
            let x = letter(curve_to_gen[&CurveId::gamma(i, k)], true);
            let mut word = Vec::with_capacity(14);
            for _ in 0..3 {
                word.extend_from_slice(&[a, a, c, d]);
            }
            word.extend_from_slice(&[-x, -x]);
            relators.push(Relator {
                kind: RelatorKind::DegenerateStar,
                word: word.clone(),
                support: support_of_word(&word, &generators),
            });
        }
    }

    let mut commuter_map = Vec::with_capacity(relators.len());
    for (ri, r) in relators.iter().enumerate() {
        commuter_map.push(common_commuter(r, t, &curve_to_gen).ok_or(
            PresentationError::NoCommuter(ri),
        )?);
    }

    let classify = relators
        .iter()
        .enumerate()
        .map(|(i, r)| (canonical_cyclic_key(&r.word), i))
        .collect();

    Ok(GervaisPresentation {
        spec: *spec,
        generators,
        relators,
        commuter_map,
        star_convention: "X,Y,Z = gamma_ij, gamma_jk, gamma_ik for alpha triple i<j<k".to_string(),
        classify,
        curve_to_gen,
    })
}

/// Lowest-index beta curve outside the relator's support and disjoint from
/// every support curve. Returns the generator id of its twist.
pub fn common_commuter(
    r: &Relator,
    t: &IncidenceTable,
    curve_to_gen: &HashMap<CurveId, usize>,
) -> Option<usize> {
    for b in 1..=t.spec().beta_count() {
        let beta = CurveId::Beta(b);
        if r.support.contains(&beta) {
            continue;
        }
        if r.support
            .iter()
            .all(|&c| t.intersection(beta, c).map(|v| v == 0).unwrap_or(false))
        {
            return curve_to_gen.get(&beta).copied();
        }
    }
    None
}
