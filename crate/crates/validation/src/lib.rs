//! Brute-force oracles, written without any of `vdreg`'s algorithms, and the
//! seeded generators the acceptance suite draws its samples from.
//!
//! Sets are `u32` masks over at most 16 points; everything here enumerates
//! subsets directly and is only meant for small inputs.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Mask = u32;

fn popcount(m: Mask) -> usize {
    m.count_ones() as usize
}

fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Subsets of `m`, including `0` and `m`.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Rank of an integer matrix reduced mod `p`, by plain row reduction.
pub fn rank_mod(mut rows: Vec<Vec<i64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u64>> = rows
        .drain(..)
        .map(|r| r.into_iter().map(|x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][c], p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..ncols {
                    m[r][k] = (m[r][k] + p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `result[d + 1] = dim H̃_d` for `d = -1 ..= max dim`, from a full face list
/// (closed under subsets, containing `0`). Empty input is the void complex.
pub fn reduced_homology(faces: &[Mask], p: u64) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|&f| popcount(f)).max().unwrap();
    let mut by_size: Vec<Vec<Mask>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[popcount(f)].push(f);
    }
    // Boundary from size-k faces to size-(k-1) faces, rows indexed by the
    // larger face.
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || by_size[k].is_empty() || by_size[k - 1].is_empty() {
            return 0;
        }
        let lower = &by_size[k - 1];
        let rows = by_size[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; lower.len()];
                let mut sign = 1i64;
                for v in 0..32 {
                    if f >> v & 1 == 1 {
                        let idx = lower.iter().position(|&g| g == f & !(1 << v)).unwrap();
                        row[idx] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        rank_mod(rows, p)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(|k| if k <= top { boundary_rank(k) } else { 0 }).collect();
    (0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// Graded Betti numbers of `R/I_Δ` by summing homology of every induced
/// subcomplex; `is_face` describes Δ on `n` points.
pub fn betti_quotient(n: usize, is_face: impl Fn(Mask) -> bool, p: u64) -> BTreeMap<(usize, usize), u64> {
    let mut table = BTreeMap::new();
    for w in 0..(1u32 << n) {
        let faces: Vec<Mask> = submasks(w).filter(|&s| is_face(s)).collect();
        let j = popcount(w);
        for (k, dim) in reduced_homology(&faces, p).into_iter().enumerate() {
            // dim H̃_{k-1}(Δ_W) adds to β_{i,j} with j - i - 1 = k - 1.
            if dim > 0 {
                *table.entry((j - k, j)).or_insert(0) += dim as u64;
            }
        }
    }
    table
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    pub n: usize,
    /// 0-based, `a < b`.
    pub edges: Vec<(usize, usize)>,
}

impl SmallGraph {
    pub fn adjacency(&self) -> Vec<Mask> {
        let mut adj = vec![0; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.edges.iter().all(|&(a, b)| s >> a & 1 == 0 || s >> b & 1 == 0)
    }

    pub fn maximal_independent_sets(&self) -> Vec<Mask> {
        let all = (1u32 << self.n) - 1;
        let ind: Vec<Mask> = (0..=all).filter(|&s| self.is_independent(s)).collect();
        let mut out: Vec<Mask> = ind
            .iter()
            .copied()
            .filter(|&s| (0..self.n).all(|v| s >> v & 1 == 1 || !self.is_independent(s | 1 << v)))
            .collect();
        out.sort();
        out
    }

    /// Largest set of pairwise 3-disjoint edges, over all edge subsets.
    pub fn induced_matching_number(&self) -> usize {
        let adj = self.adjacency();
        let compatible = |e: (usize, usize), f: (usize, usize)| {
            let ends = (1u32 << e.0) | (1 << e.1);
            let other = (1u32 << f.0) | (1 << f.1);
            ends & other == 0
                && (adj[e.0] | adj[e.1]) & other == 0
        };
        fn best(edges: &[(usize, usize)], chosen: &mut Vec<(usize, usize)>, ok: &dyn Fn((usize, usize), (usize, usize)) -> bool) -> usize {
            let Some((&e, rest)) = edges.split_first() else {
                return chosen.len();
            };
            let mut b = best(rest, chosen, ok);
            if chosen.iter().all(|&c| ok(c, e)) {
                chosen.push(e);
                b = b.max(best(rest, chosen, ok));
                chosen.pop();
            }
            b
        }
        best(&self.edges, &mut Vec::new(), &compatible)
    }

    /// No induced cycle of length at least four.
    pub fn is_chordal(&self) -> bool {
        let adj = self.adjacency();
        (0..(1u32 << self.n)).filter(|&s| popcount(s) >= 4).all(|s| {
            let two_regular = (0..self.n)
                .filter(|&v| s >> v & 1 == 1)
                .all(|v| popcount(adj[v] & s) == 2);
            !(two_regular && self.connected_within(s))
        })
    }

    fn connected_within(&self, s: Mask) -> bool {
        let adj = self.adjacency();
        let start = s.trailing_zeros() as usize;
        let mut seen: Mask = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & s & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == s
    }

    pub fn is_forest(&self) -> bool {
        // A graph is a forest iff |E| = n - (number of components).
        let mut comps = 0;
        let mut left: Mask = (1u32 << self.n) - 1;
        let adj = self.adjacency();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let mut comp: Mask = 1 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = adj[u] & !comp;
                comp |= new;
                frontier |= new;
            }
            left &= !comp;
            comps += 1;
        }
        self.edges.len() + comps == self.n
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SmallGraph {
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    SmallGraph { n, edges }
}

/// Each new vertex attaches to a random earlier vertex.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> SmallGraph {
    let edges = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    SmallGraph { n, edges }
}

/// Each new vertex is joined to a clique of earlier vertices, so the reverse
/// insertion order is a perfect elimination ordering.
pub fn random_chordal(rng: &mut ChaCha8Rng, n: usize) -> SmallGraph {
    let mut adj = vec![0u32; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let anchor = rng.gen_range(0..v);
        let mut clique: Mask = 1 << anchor;
        for u in 0..v {
            if u != anchor && clique & !adj[u] == 0 && rng.gen_bool(0.5) {
                clique |= 1 << u;
            }
        }
        if rng.gen_bool(0.15) {
            clique = 0;
        }
        for u in 0..v {
            if clique >> u & 1 == 1 {
                edges.push((u, v));
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    edges.sort();
    SmallGraph { n, edges }
}

/// Random generator supports on `n` variables (not necessarily an antichain).
pub fn random_supports(rng: &mut ChaCha8Rng, n: usize) -> Vec<Mask> {
    let k = rng.gen_range(1..=2 * n);
    (0..k)
        .map(|_| loop {
            let s: Mask = rng.gen_range(1..(1u32 << n));
            if popcount(s) <= n.min(4) {
                break s;
            }
        })
        .collect()
}

/// Inclusion-minimal members.
pub fn minimal(sets: &[Mask]) -> Vec<Mask> {
    let mut out: Vec<Mask> = sets
        .iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && is_subset(t, s)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Minimal transversals by scanning every subset of the ground set.
pub fn minimal_transversals(n: usize, sets: &[Mask]) -> Vec<Mask> {
    let hits: Vec<Mask> = (0..(1u32 << n))
        .filter(|&t| sets.iter().all(|&s| s & t != 0))
        .collect();
    minimal(&hits)
}

/// Facets of the complex whose faces contain no member of `gens`.
pub fn facets_avoiding(n: usize, gens: &[Mask]) -> Vec<Mask> {
    let faces: Vec<Mask> = (0..(1u32 << n))
        .filter(|&f| gens.iter().all(|&g| !is_subset(g, f)))
        .collect();
    let mut out: Vec<Mask> = faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&g| g != f && is_subset(f, g)))
        .collect();
    out.sort();
    out
}

/// Calls `visit` on every antichain of subsets of an `n`-point set, including
/// the empty antichain and `{∅}`.
pub fn for_each_antichain(n: usize, mut visit: impl FnMut(&[Mask])) {
    let total = 1usize << n;
    // comparable[s]: subsets and supersets of s, as a bitmask over the 2^n sets.
    let comparable: Vec<u128> = (0..total)
        .map(|s| {
            (0..total)
                .filter(|&t| is_subset(s as Mask, t as Mask) || is_subset(t as Mask, s as Mask))
                .fold(0u128, |m, t| m | 1 << t)
        })
        .collect();
    fn walk(
        from: usize,
        total: usize,
        blocked: u128,
        comparable: &[u128],
        chosen: &mut Vec<Mask>,
        visit: &mut dyn FnMut(&[Mask]),
    ) {
        visit(chosen);
        for s in from..total {
            if blocked >> s & 1 == 0 {
                chosen.push(s as Mask);
                walk(s + 1, total, blocked | comparable[s], comparable, chosen, visit);
                chosen.pop();
            }
        }
    }
    assert!(n <= 7, "at most 128 subsets fit the blocking mask");
    walk(0, total, 0, &comparable, &mut Vec::new(), &mut visit);
}
