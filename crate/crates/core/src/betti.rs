//! Graded Betti numbers of square-free monomial ideals via Hochster's formula,
//! and the regularity-based tests built on them.
//!
//! `β_{i,j}(R/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ|_W)`, summed over all
//! `W ⊆ V`, and `β_{i,j}(I) = β_{i+1,j}(R/I)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::graph::Graph;
use crate::homology::{bucket_faces, reduced_homology_of_faces};
use crate::ideal::SqFreeIdeal;
use crate::vertex_set::VertexSet;
use crate::with_field;

/// Largest ring for which all `2^n` induced subcomplexes are enumerated.
pub const HOCHSTER_RING_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    /// The ideal `I` itself.
    Ideal,
    /// The quotient `R/I`.
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub subject: Subject,
    pub field: FieldSpec,
    /// Nonzero entries only, keyed by `(i, j)`.
    pub entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`, or `None` for an empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
    }

    /// Projective dimension: the largest homological index.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Rewrites a quotient table as the table of the ideal, or back.
    pub fn shifted(&self, subject: Subject) -> BettiTable {
        let entries = match (self.subject, subject) {
            (a, b) if a == b => self.entries.clone(),
            (Subject::Quotient, Subject::Ideal) => self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), &b)| ((i - 1, j), b))
                .collect(),
            _ => {
                let mut e: BTreeMap<_, _> = self
                    .entries
                    .iter()
                    .map(|(&(i, j), &b)| ((i + 1, j), b))
                    .collect();
                e.insert((0, 0), 1);
                e
            }
        };
        BettiTable {
            subject,
            field: self.field,
            entries,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct BettiTableJson {
    subject: Subject,
    #[serde(rename = "char")]
    characteristic: u64,
    entries: Vec<BettiEntry>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BettiTableJson {
            subject: self.subject,
            characteristic: self.field.characteristic(),
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BettiTableJson::deserialize(d)?;
        let field = FieldSpec::new(raw.characteristic).map_err(serde::de::Error::custom)?;
        Ok(BettiTable {
            subject: raw.subject,
            field,
            entries: raw
                .entries
                .into_iter()
                .filter(|e| e.beta > 0)
                .map(|e| ((e.i, e.j), e.beta))
                .collect(),
        })
    }
}

/// Face indicator of `Δ` with `I = I_Δ` over all `2^n` subsets.
fn face_bitmap(ideal: &SqFreeIdeal) -> Vec<bool> {
    let n = ideal.ring_size();
    let mut nonface = vec![false; 1 << n];
    for g in ideal.gens() {
        nonface[g.bits() as usize] = true;
    }
    // Upward closure: supersets of non-faces are non-faces.
    for v in 0..n {
        let bit = 1usize << v;
        for s in 0..nonface.len() {
            if s & bit != 0 && nonface[s ^ bit] {
                nonface[s] = true;
            }
        }
    }
    nonface.into_iter().map(|x| !x).collect()
}

fn quotient_table<F: Field>(ideal: &SqFreeIdeal) -> BTreeMap<(usize, usize), u64> {
    let n = ideal.ring_size();
    let is_face = face_bitmap(ideal);
    (0u64..1 << n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), u64>, w| {
            let w = VertexSet(w);
            // A full simplex has no reduced homology unless it is {∅}.
            if is_face[w.bits() as usize] && !w.is_empty() {
                return acc;
            }
            let faces = bucket_faces(w.subsets().filter(|s| is_face[s.bits() as usize]));
            let j = w.len();
            for (k, dim) in reduced_homology_of_faces::<F>(&faces).into_iter().enumerate() {
                // dim H̃_{k-1}(Δ_W) contributes to β_{i,j} with j - i - 1 = k - 1.
                if dim > 0 {
                    *acc.entry((j - k, j)).or_insert(0) += dim as u64;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// The graded Betti table of `I` or `R/I` over `field`.
pub fn betti_table(ideal: &SqFreeIdeal, subject: Subject, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.ring_size() > HOCHSTER_RING_CAP {
        return Err(Error::SizeCap {
            what: "polynomial ring",
            size: ideal.ring_size(),
            cap: HOCHSTER_RING_CAP,
        });
    }
    let entries = with_field!(field, F => quotient_table::<F>(ideal));
    let quotient = BettiTable {
        subject: Subject::Quotient,
        field,
        entries,
    };
    Ok(quotient.shifted(subject))
}

/// Castelnuovo-Mumford regularity of `I` or `R/I`.
pub fn regularity(ideal: &SqFreeIdeal, subject: Subject, field: FieldSpec) -> Result<i64> {
    betti_table(ideal, subject, field)?
        .regularity()
        .ok_or(Error::ZeroIdeal)
}

/// For `I` generated in a single degree `d`: true iff `reg(I) = d`.
pub fn has_linear_resolution(ideal: &SqFreeIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let degrees = ideal.degrees();
    if degrees.len() > 1 {
        return Err(Error::MixedDegrees(degrees));
    }
    Ok(regularity(ideal, Subject::Ideal, field)? == degrees[0] as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CwlStrategy {
    /// Every square-free component `I_[d]`, from the lowest generator degree
    /// up to the number of variables.
    Full,
    /// Components strictly below the top generator degree `d_m`, plus the
    /// single check `reg(I) = d_m`.
    #[default]
    Shortcut,
}

/// Componentwise linearity of a square-free ideal.
pub fn is_componentwise_linear(
    ideal: &SqFreeIdeal,
    field: FieldSpec,
    strategy: CwlStrategy,
) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let degrees = ideal.degrees();
    let (low, top) = (degrees[0], *degrees.last().unwrap());
    let upper = match strategy {
        CwlStrategy::Full => ideal.ring_size(),
        CwlStrategy::Shortcut => top - 1,
    };
    for d in low..=upper {
        let component = ideal.squarefree_component(d);
        if !component.is_zero() && !has_linear_resolution(&component, field)? {
            return Ok(false);
        }
    }
    match strategy {
        CwlStrategy::Full => Ok(true),
        CwlStrategy::Shortcut => Ok(regularity(ideal, Subject::Ideal, field)? == top as i64),
    }
}

/// Sequential Cohen-Macaulayness of `R/I(G)`, decided by componentwise
/// linearity of the Alexander dual of `I(G)`.
///
/// Only the vertices still present in `g` are used as variables. Graphs with
/// more than 16 of them must be certified by a shelling instead.
pub fn is_sequentially_cm(g: &Graph, field: FieldSpec) -> Result<bool> {
    let (compact, _) = g.compact();
    if compact.ground_size() > HOCHSTER_RING_CAP {
        return Err(Error::UseCertificate(compact.ground_size()));
    }
    let ideal = SqFreeIdeal::edge_ideal(&compact);
    if ideal.is_zero() {
        // R/0 is a polynomial ring.
        return Ok(true);
    }
    is_componentwise_linear(&ideal.alexander_dual()?, field, CwlStrategy::Shortcut)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_indices(v.iter().map(|x| x - 1))
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> SqFreeIdeal {
        SqFreeIdeal::new(n, gens.iter().map(|g| vs(g))).unwrap()
    }

    #[test]
    fn principal_koszul() {
        let t = betti_table(&ideal(2, &[&[1, 2]]), Subject::Quotient, FieldSpec::F2).unwrap();
        assert_eq!(t.entries, BTreeMap::from([((0, 0), 1), ((1, 2), 1)]));
        let t = t.shifted(Subject::Ideal);
        assert_eq!(t.entries, BTreeMap::from([((0, 2), 1)]));
    }

    #[test]
    fn zero_ideal_is_polynomial_ring() {
        let z = SqFreeIdeal::zero(3);
        assert_eq!(regularity(&z, Subject::Quotient, FieldSpec::F2).unwrap(), 0);
        assert_eq!(
            regularity(&z, Subject::Ideal, FieldSpec::F2),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn c5_regularity() {
        let c5 = SqFreeIdeal::edge_ideal(&Graph::circulant(5, &[1]).unwrap());
        for f in FieldSpec::DEFAULT_PAIR {
            assert_eq!(regularity(&c5, Subject::Quotient, f).unwrap(), 2);
            assert_eq!(regularity(&c5, Subject::Ideal, f).unwrap(), 3);
        }
    }

    #[test]
    fn linear_resolutions() {
        let f = FieldSpec::F2;
        assert!(has_linear_resolution(&ideal(3, &[&[1, 2], &[2, 3]]), f).unwrap());
        assert!(!has_linear_resolution(&ideal(4, &[&[1, 2], &[3, 4]]), f).unwrap());
        let two_edges = betti_table(&ideal(4, &[&[1, 2], &[3, 4]]), Subject::Ideal, f).unwrap();
        assert_eq!(two_edges.get(1, 4), 1);
        assert!(has_linear_resolution(&ideal(3, &[&[1, 2, 3]]), f).unwrap());
        assert_eq!(
            has_linear_resolution(&ideal(3, &[&[1], &[2, 3]]), f),
            Err(Error::MixedDegrees(vec![1, 2]))
        );
    }

    #[test]
    fn componentwise_linearity() {
        let f = FieldSpec::F32003;
        for s in [CwlStrategy::Full, CwlStrategy::Shortcut] {
            assert!(!is_componentwise_linear(&ideal(4, &[&[1, 2], &[3, 4]]), f, s).unwrap());
            assert!(is_componentwise_linear(&ideal(4, &[&[1, 2, 3]]), f, s).unwrap());
        }
    }

    #[test]
    fn cycles_sequentially_cm_only_for_3_and_5() {
        for n in 3..=9 {
            let c = Graph::circulant(n, &[1]).unwrap();
            assert_eq!(is_sequentially_cm(&c, FieldSpec::F2).unwrap(), n == 3 || n == 5, "C_{n}");
        }
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_sequentially_cm(&p4, FieldSpec::F2).unwrap());
    }

    #[test]
    fn ring_cap() {
        let g = Graph::circulant(17, &[1]).unwrap();
        let i = SqFreeIdeal::edge_ideal(&g);
        assert!(matches!(
            betti_table(&i, Subject::Quotient, FieldSpec::F2),
            Err(Error::SizeCap { .. })
        ));
        assert_eq!(is_sequentially_cm(&g, FieldSpec::F2), Err(Error::UseCertificate(17)));
    }

    #[test]
    fn json_shape() {
        let t = betti_table(&ideal(2, &[&[1, 2]]), Subject::Quotient, FieldSpec::F2).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"subject":"quotient","char":2,"entries":[{"i":0,"j":0,"beta":1},{"i":1,"j":2,"beta":1}]}"#
        );
        let back: BettiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
