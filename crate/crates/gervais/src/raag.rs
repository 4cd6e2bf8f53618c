//! Words over the twist generators with the right-angled Artin group metric.
//!
//! The commutation graph has one vertex per generator and an edge for each
//! disjoint pair of curves. Twist words are measured in the RAAG on this
//! graph; the mapping class group is a quotient, so RAAG lengths are upper
//! bounds for the quotient metric and exact in RAAG mode.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::curves::IncidenceTable;
use crate::presentation::{generator_of, invert_word, GervaisPresentation, Letter};

/// Simple undirected graph on generator ids; edge = the twists commute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationGraph {
    n: usize,
    /// Row-major adjacency, `n x n`.
    adj: Vec<bool>,
}

impl CommutationGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.adj[a * self.n + b] = true;
        self.adj[b * self.n + a] = true;
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.n + b]
    }

    /// Letters commute if their generators are adjacent or equal.
    pub fn letters_commute(&self, x: Letter, y: Letter) -> bool {
        let (gx, gy) = (generator_of(x), generator_of(y));
        gx == gy || self.adjacent(gx, gy)
    }
}

/// Commutation graph of a presentation: edge iff the curves are disjoint.
pub fn raag_from_presentation(p: &GervaisPresentation, t: &IncidenceTable) -> CommutationGraph {
    let n = p.generators.len();
    let mut g = CommutationGraph::new(n);
    for a in 0..n {
        for b in (a + 1)..n {
            if t.intersection_by_index(a, b) == 0 {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Shuffle-reduces a word by the stack algorithm: each letter cancels
/// against the nearest inverse reachable across a block of letters that all
/// commute with it. The result is a geodesic representative.
pub fn reduce(word: &[Letter], g: &CommutationGraph) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    'letters: for &x in word {
        for i in (0..out.len()).rev() {
            let y = out[i];
            if y == -x {
                out.remove(i);
                continue 'letters;
            }
            if !g.letters_commute(y, x) {
                break;
            }
        }
        out.push(x);
    }
    out
}

/// Exact RAAG geodesic length.
pub fn geodesic_length(word: &[Letter], g: &CommutationGraph) -> usize {
    reduce(word, g).len()
}

/// Lexicographically least shuffle of the reduced form: a canonical normal
/// form, so two words are equal in the group iff their normal forms match.
pub fn normal_form(word: &[Letter], g: &CommutationGraph) -> Vec<Letter> {
    let mut remaining = reduce(word, g);
    let mut out = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best: Option<usize> = None;
        for j in 0..remaining.len() {
            let x = remaining[j];
            if remaining[..j].iter().all(|&y| g.letters_commute(y, x)) {
                if best.map(|b| x < remaining[b]).unwrap_or(true) {
                    best = Some(j);
                }
            }
        }
        let j = best.expect("nonempty word has a front-movable letter");
        out.push(remaining.remove(j));
    }
    out
}

pub fn words_equal(a: &[Letter], b: &[Letter], g: &CommutationGraph) -> bool {
    normal_form(a, g) == normal_form(b, g)
}

pub fn concat(a: &[Letter], b: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out
}

/// Coordinates in a flat coset `v·H'` for a clique `H'` of beta generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianCoords {
    /// The coset basepoint word.
    pub basepoint: Vec<Letter>,
    /// Exponent vector over the (sorted) basis.
    pub coords: Vec<i64>,
}

impl AbelianCoords {
    pub fn l1_distance(&self, other: &AbelianCoords) -> u64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }
}

/// Membership and coordinates of `x` in `v·H'`: decided via `reduce(v⁻¹x)`
/// using only H'-letters. Coordinates are relative to `v`.
pub fn coset_coords(
    v: &[Letter],
    basis: &[usize],
    x: &[Letter],
    g: &CommutationGraph,
) -> Option<AbelianCoords> {
    let diff = reduce(&concat(&invert_word(v), x), g);
    let mut coords = vec![0i64; basis.len()];
    for &l in &diff {
        let gen = generator_of(l);
        let idx = basis.iter().position(|&b| b == gen)?;
        coords[idx] += l.signum() as i64;
    }
    Some(AbelianCoords {
        basepoint: v.to_vec(),
        coords,
    })
}

/// A flat-coset chart: the right-stripped basepoint `u0` (no H'-letter can
/// shuffle to its end), its length `s`, and the coordinates of the original
/// word `v` in the chart.
///
/// The clique embeds isometrically, and `u0` realizes the coset distance:
/// `d(x0, u0·h) = s + |h|_1` for every `h` in H'. This identity is what the
/// transform uses for bulk exact distances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetChart {
    pub basis: Vec<usize>,
    pub base: Vec<Letter>,
    pub s: u64,
    pub base_coords: Vec<i64>,
}

impl CosetChart {
    /// Exact distance from the identity to the chart point with the given
    /// coordinates.
    pub fn exact_distance(&self, coords: &[i64]) -> u64 {
        self.s + coords.iter().map(|c| c.unsigned_abs()).sum::<u64>()
    }

    /// The word for the chart point with the given coordinates.
    pub fn word_at(&self, coords: &[i64]) -> Vec<Letter> {
        let mut w = self.base.clone();
        for (i, &c) in coords.iter().enumerate() {
            let l = (self.basis[i] + 1) as Letter;
            for _ in 0..c.unsigned_abs() {
                w.push(if c > 0 { l } else { -l });
            }
        }
        w
    }
}

/// Builds the chart for `v·H'` by stripping H'-letters off the right end of
/// the reduced word for `v` (a letter strips when everything after it
/// commutes with it).
pub fn coset_chart(v: &[Letter], basis: &[usize], g: &CommutationGraph) -> CosetChart {
    let mut basis = basis.to_vec();
    basis.sort_unstable();
    basis.dedup();
    let mut base = reduce(v, g);
    let mut stripped = vec![0i64; basis.len()];
    'strip: loop {
        for i in (0..base.len()).rev() {
            let x = base[i];
            let gen = generator_of(x);
            if let Some(bi) = basis.iter().position(|&b| b == gen) {
                if base[i + 1..].iter().all(|&y| g.letters_commute(y, x)) {
                    stripped[bi] += x.signum() as i64;
                    base.remove(i);
                    continue 'strip;
                }
            }
        }
        break;
    }
    let s = base.len() as u64;
    CosetChart {
        basis,
        base,
        s,
        base_coords: stripped,
    }
}

/// Exact distance table for the ball of a given radius in the RAAG Cayley
/// graph. Keys are canonical normal forms.
pub fn bfs_distance_oracle(
    g: &CommutationGraph,
    radius: usize,
    max_size: usize,
) -> Result<HashMap<Vec<Letter>, usize>, String> {
    let mut dist: HashMap<Vec<Letter>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(Vec::new(), 0);
    queue.push_back(Vec::new());
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == radius {
            continue;
        }
        for gen in 0..g.generator_count() {
            for sign in [1i32, -1] {
                let l = (gen as i32 + 1) * sign;
                let next = normal_form(&concat(&w, &[l]), g);
                if !dist.contains_key(&next) {
                    if dist.len() >= max_size {
                        return Err(format!("ball exceeds the guard of {max_size} elements"));
                    }
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{build_incidence, CurveId, SurfaceSpec};
    use crate::presentation::build_presentation;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn path_graph_abc() -> CommutationGraph {
        // a - b - c
        CommutationGraph::from_edges(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn reduce_examples() {
        let adj = CommutationGraph::from_edges(2, &[(0, 1)]);
        assert_eq!(reduce(&[1, 2, -1], &adj), vec![2]);
        let non = CommutationGraph::new(2);
        assert_eq!(reduce(&[1, 2, -1], &non), vec![1, 2, -1]);
    }

    #[test]
    fn commutator_lengths() {
        let adj = CommutationGraph::from_edges(2, &[(0, 1)]);
        let non = CommutationGraph::new(2);
        let comm = [1, 2, -1, -2];
        assert_eq!(geodesic_length(&comm, &adj), 0);
        assert_eq!(geodesic_length(&comm, &non), 4);
    }

    #[test]
    fn presentation_graph_shape() {
        let spec = SurfaceSpec::new(5, 0).unwrap();
        let t = build_incidence(&spec).unwrap();
        let p = build_presentation(&spec, &t).unwrap();
        let g = raag_from_presentation(&p, &t);
        let betas: Vec<usize> = p.h_basis();
        assert_eq!(betas.len(), 5);
        for &a in &betas {
            for &b in &betas {
                if a != b {
                    assert!(g.adjacent(a, b));
                }
            }
        }
        let alphas: Vec<usize> = p
            .generators
            .iter()
            .filter(|gen| matches!(gen.curve, CurveId::Alpha(_)))
            .map(|gen| gen.id)
            .collect();
        for &a in &alphas {
            for &b in &alphas {
                if a != b {
                    assert!(g.adjacent(a, b));
                }
            }
        }
        let beta1 = p.generator_for(CurveId::Beta(1)).unwrap();
        for &a in &alphas {
            assert!(!g.adjacent(beta1, a));
        }
    }

    #[test]
    fn bfs_ball_counts() {
        // Z^2: two commuting generators; |ball(3)| = 25 lattice points.
        let z2 = CommutationGraph::from_edges(2, &[(0, 1)]);
        let ball = bfs_distance_oracle(&z2, 3, 10_000).unwrap();
        assert_eq!(ball.len(), 25);
        // Free group of rank 2: 1 + 4 + 12 + 36 = 53.
        let f2 = CommutationGraph::new(2);
        let ball = bfs_distance_oracle(&f2, 3, 10_000).unwrap();
        assert_eq!(ball.len(), 53);
    }

    #[test]
    fn bfs_guard_triggers() {
        let f2 = CommutationGraph::new(2);
        assert!(bfs_distance_oracle(&f2, 6, 100).is_err());
    }

    #[test]
    fn geodesic_length_matches_bfs_on_path_graph() {
        let g = path_graph_abc();
        let ball = bfs_distance_oracle(&g, 5, 1_000_000).unwrap();
        for (w, d) in &ball {
            assert_eq!(geodesic_length(w, &g), *d, "word {w:?}");
        }
    }

    #[test]
    fn random_words_match_bfs_normal_forms() {
        // Element equality with BFS normal forms on 4-generator graphs.
        let graphs = [
            CommutationGraph::new(4),
            CommutationGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]),
            CommutationGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in &graphs {
            let ball = bfs_distance_oracle(g, 6, 2_000_000).unwrap();
            for _ in 0..200 {
                let w: Vec<Letter> = (0..12)
                    .map(|_| {
                        let gen = rng.gen_range(0..4) as i32 + 1;
                        if rng.gen_bool(0.5) {
                            gen
                        } else {
                            -gen
                        }
                    })
                    .collect();
                let nf = normal_form(&w, g);
                if let Some(&d) = ball.get(&nf) {
                    assert_eq!(geodesic_length(&w, g), d);
                }
            }
        }
    }

    #[test]
    fn coset_coords_examples() {
        // Clique of three betas inside a 4-generator graph.
        let g = CommutationGraph::from_edges(4, &[(1, 2), (1, 3), (2, 3)]);
        let basis = [1usize, 2, 3];
        let v = vec![1, 2]; // some basepoint word
        // x = v * h1^2 * h3^-1  (generators 1 and 3 -> letters 2 and 4)
        let x = concat(&v, &[2, 2, -4]);
        let c = coset_coords(&v, &basis, &x, &g).unwrap();
        assert_eq!(c.coords, vec![2, 0, -1]);
        // A non-H' letter leaves the coset: generator 0 is not in the basis.
        let y = concat(&v, &[1]);
        assert!(coset_coords(&v, &basis, &y, &g).is_none());
    }

    #[test]
    fn chart_distance_identity_small() {
        let spec = SurfaceSpec::new(5, 0).unwrap();
        let t = build_incidence(&spec).unwrap();
        let p = build_presentation(&spec, &t).unwrap();
        let g = raag_from_presentation(&p, &t);
        let basis = p.h_basis();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = g.generator_count() as i32;
        for _ in 0..60 {
            let v: Vec<Letter> = (0..rng.gen_range(0..14))
                .map(|_| {
                    let gen = rng.gen_range(0..n) + 1;
                    if rng.gen_bool(0.5) {
                        gen
                    } else {
                        -gen
                    }
                })
                .collect();
            let chart = coset_chart(&v, &basis, &g);
            for _ in 0..8 {
                let coords: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-4..=4)).collect();
                let w = chart.word_at(&coords);
                assert_eq!(
                    geodesic_length(&w, &g) as u64,
                    chart.exact_distance(&coords),
                    "chart identity failed for base {:?} coords {:?}",
                    chart.base,
                    coords
                );
            }
        }
    }

    proptest! {
        #[test]
        fn reduce_is_independent_of_move_order(seed in 0u64..500) {
            // Randomize cancel order and compare lengths with the stack
            // reduction.
            let g = path_graph_abc();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let w: Vec<Letter> = (0..14)
                .map(|_| {
                    let gen = rng.gen_range(0..3) as i32 + 1;
                    if rng.gen_bool(0.5) { gen } else { -gen }
                })
                .collect();
            let mut cur = w.clone();
            loop {
                let mut moves = Vec::new();
                for i in 0..cur.len() {
                    for j in (i + 1)..cur.len() {
                        if cur[j] == -cur[i]
                            && cur[i + 1..j].iter().all(|&y| g.letters_commute(y, cur[i]))
                        {
                            moves.push((i, j));
                        }
                    }
                }
                if moves.is_empty() {
                    break;
                }
                let (i, j) = moves[rng.gen_range(0..moves.len())];
                cur.remove(j);
                cur.remove(i);
            }
            prop_assert_eq!(cur.len(), geodesic_length(&w, &g));
        }

        #[test]
        fn metric_properties_sampled(seed in 0u64..200) {
            let g = CommutationGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rand_word = |rng: &mut ChaCha8Rng| -> Vec<Letter> {
                (0..rng.gen_range(0..10))
                    .map(|_| {
                        let gen = rng.gen_range(0..4) as i32 + 1;
                        if rng.gen_bool(0.5) { gen } else { -gen }
                    })
                    .collect()
            };
            let a = rand_word(&mut rng);
            let b = rand_word(&mut rng);
            let c = rand_word(&mut rng);
            let d = |x: &[Letter], y: &[Letter]| {
                geodesic_length(&concat(&invert_word(x), y), &g)
            };
            // Triangle inequality and left-invariance.
            prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
            let ga = concat(&c, &a);
            let gb = concat(&c, &b);
            prop_assert_eq!(d(&a, &b), d(&ga, &gb));
            // Identity iff zero length.
            prop_assert_eq!(d(&a, &a), 0);
        }

        #[test]
        fn clique_cosets_are_isometric(seed in 0u64..200) {
            // d = d_{H'} on sampled coset pairs.
            let g = CommutationGraph::from_edges(5, &[(2, 3), (2, 4), (3, 4), (0, 2), (1, 3)]);
            let basis = [2usize, 3, 4];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let v: Vec<Letter> = (0..rng.gen_range(0..8))
                .map(|_| {
                    let gen = rng.gen_range(0..5) as i32 + 1;
                    if rng.gen_bool(0.5) { gen } else { -gen }
                })
                .collect();
            let mut coords = || -> Vec<i64> {
                (0..3).map(|_| rng.gen_range(-3..=3)).collect()
            };
            let c1 = coords();
            let c2 = coords();
            let h = |c: &[i64]| -> Vec<Letter> {
                let mut w = Vec::new();
                for (i, &x) in c.iter().enumerate() {
                    let l = (basis[i] + 1) as Letter;
                    for _ in 0..x.unsigned_abs() {
                        w.push(if x > 0 { l } else { -l });
                    }
                }
                w
            };
            let x1 = concat(&v, &h(&c1));
            let x2 = concat(&v, &h(&c2));
            let dist = geodesic_length(&concat(&invert_word(&x1), &x2), &g) as u64;
            let l1: u64 = c1.iter().zip(&c2).map(|(a, b)| a.abs_diff(*b)).sum();
            prop_assert_eq!(dist, l1);
        }
    }
}
