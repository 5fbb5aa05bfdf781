//! Machine-checked refutation of vertex decomposability for the 26-vertex graph.
//!
//! A vertex decomposition of `Ind(G)` must start at some shedding vertex `x`
//! whose deletion `Ind(G ∖ x)` is itself vertex decomposable. Every vertex is
//! ruled out by one of two cases:
//!
//! * `x ∈ F_0`: the deletion acquires a facet outside `F_0..F_80`; we record
//!   it, and close the case with an explicit maximal independent set of `G ∖ x`
//!   inside `G ∖ N[x]` (so `x` is not shedding) or, failing that, with the
//!   generic search on `G ∖ x`.
//! * `x ∉ F_0`: `del_{Ind(G)} x` consists of `F_0` and the facets of
//!   `del_{Ind(C_16(1,4,8))} x`, which is pure. A shelling of the former would
//!   yield one of the latter, making it Cohen-Macaulay; Reisner's criterion
//!   shows it is not. So the deletion is not shellable, hence not vertex
//!   decomposable. The pure-skeleton homology of the full deletion is checked
//!   as well, which refutes its shellability directly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::decomp::shelling::{find_shelling, NonShellableProof, ShellingOptions, ShellingSearch};
use crate::decomp::vd::{check_shedding_witness, is_vertex_decomposable, shedding_obstruction, VdOptions, VdVerdict};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::fixtures;
use crate::graph::Graph;
use crate::homology::{reduced_homology_dims, reisner_obstruction, ReisnerWitness};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RefutationCase {
    /// The vertex lies in `F_0`.
    NewFacet,
    /// The vertex lies in the join side, outside `F_0`.
    NotShellable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    NotShedding,
    DeletionNotVd,
    DeletionNotShellable,
    Unrefuted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReisnerCheck {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub witness: Option<ReisnerWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRefutation {
    /// 1-based.
    pub vertex: usize,
    pub case: RefutationCase,
    /// A facet of `del_{Ind(G)} x` that is none of `F_0..F_80`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub new_facet: Option<Vec<usize>>,
    /// A maximal independent set of `G ∖ x` inside `G ∖ N[x]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub not_shedding_witness: Option<Vec<usize>>,
    /// Generic search on `G ∖ x`, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deletion_vd: Option<VdVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c16_deletion_pure: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c16_deletion_facets: Option<usize>,
    /// Facets of `del_{Ind(G)} x` are `F_0` plus those of `del_{Ind(C_16)} x`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deletion_is_f0_plus_c16_deletion: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub reisner: Vec<ReisnerCheck>,
    /// Direct non-shellability proof for `del_{Ind(G)} x`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deletion_shelling: Option<NonShellableProof>,
    pub justification: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G26Refutation {
    pub vertices: Vec<VertexRefutation>,
    pub not_vertex_decomposable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefuteOptions {
    pub fields: Vec<FieldSpec>,
    /// State budget for the generic search on case-A deletions; 0 skips it.
    pub case_a_vd_budget: usize,
    pub direct_shelling_check: bool,
}

impl Default for RefuteOptions {
    fn default() -> Self {
        RefuteOptions {
            fields: FieldSpec::DEFAULT_PAIR.to_vec(),
            case_a_vd_budget: 1_000_000,
            direct_shelling_check: true,
        }
    }
}

fn same_graph(a: &Graph, b: &Graph) -> bool {
    a.ground_size() == b.ground_size() && a.vertices() == b.vertices() && a.edges() == b.edges()
}

fn labels(set: &[usize]) -> VertexSet {
    set.iter().map(|l| l - 1).collect()
}

/// Runs both cases over all 26 vertices with default options.
pub fn refute_vd_g26(g26: &Graph) -> Result<G26Refutation> {
    refute_vd_g26_with(g26, &RefuteOptions::default())
}

pub fn refute_vd_g26_with(g26: &Graph, opts: &RefuteOptions) -> Result<G26Refutation> {
    let expected = fixtures::g26();
    if !same_graph(g26, &expected) {
        return Err(Error::FixtureMismatch(
            "graph differs from C_16(1,4,8) joined to x17..x26".into(),
        ));
    }
    let ind = SimplicialComplex::independence_complex(g26);
    let listed: Vec<VertexSet> = {
        let mut f = fixtures::listed_g26_order().0;
        f.sort();
        f
    };
    if ind.facets() != listed.as_slice() {
        return Err(Error::FixtureMismatch("Ind(G) is not F_0..F_80".into()));
    }
    let f0 = labels(&fixtures::G26_F0);
    let ind_c16 = SimplicialComplex::independence_complex(&fixtures::c16());

    let vertices = (0..26usize)
        .into_par_iter()
        .map(|x| {
            if f0.contains(x) {
                case_new_facet(g26, &ind, &listed, x, opts)
            } else {
                case_not_shellable(&ind, &ind_c16, f0, x, opts)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let not_vertex_decomposable = vertices
        .iter()
        .all(|v| v.justification != Justification::Unrefuted);
    Ok(G26Refutation {
        vertices,
        not_vertex_decomposable,
    })
}

fn blank(x: usize, case: RefutationCase) -> VertexRefutation {
    VertexRefutation {
        vertex: x + 1,
        case,
        new_facet: None,
        not_shedding_witness: None,
        deletion_vd: None,
        c16_deletion_pure: None,
        c16_deletion_facets: None,
        deletion_is_f0_plus_c16_deletion: None,
        reisner: Vec::new(),
        deletion_shelling: None,
        justification: Justification::Unrefuted,
    }
}

fn case_new_facet(
    g26: &Graph,
    ind: &SimplicialComplex,
    listed: &[VertexSet],
    x: usize,
    opts: &RefuteOptions,
) -> Result<VertexRefutation> {
    let mut rec = blank(x, RefutationCase::NewFacet);
    let deletion = ind.deletion(VertexSet::singleton(x));
    rec.new_facet = deletion
        .facets()
        .iter()
        .find(|f| listed.binary_search(f).is_err())
        .map(|f| f.to_labels());
    rec.not_shedding_witness = shedding_obstruction(g26, x).map(|w| w.to_labels());
    if opts.case_a_vd_budget > 0 {
        let vd = VdOptions {
            state_budget: opts.case_a_vd_budget,
        };
        rec.deletion_vd = Some(is_vertex_decomposable(&g26.delete_vertex(x), &vd).0);
    }
    rec.justification = if rec.not_shedding_witness.is_some() {
        Justification::NotShedding
    } else if rec.deletion_vd == Some(VdVerdict::NotDecomposable) {
        Justification::DeletionNotVd
    } else {
        Justification::Unrefuted
    };
    Ok(rec)
}

fn case_not_shellable(
    ind: &SimplicialComplex,
    ind_c16: &SimplicialComplex,
    f0: VertexSet,
    x: usize,
    opts: &RefuteOptions,
) -> Result<VertexRefutation> {
    let mut rec = blank(x, RefutationCase::NotShellable);
    let single = VertexSet::singleton(x);
    let c16_del = ind_c16.deletion(single);
    rec.c16_deletion_pure = Some(c16_del.is_pure());
    rec.c16_deletion_facets = Some(c16_del.facets().len());

    let deletion = ind.deletion(single);
    let mut expected: Vec<VertexSet> = c16_del.facets().to_vec();
    expected.push(f0);
    expected.sort();
    rec.deletion_is_f0_plus_c16_deletion = Some(deletion.facets() == expected.as_slice());

    for &field in &opts.fields {
        rec.reisner.push(ReisnerCheck {
            characteristic: field.characteristic(),
            witness: reisner_obstruction(&c16_del, field)?,
        });
    }
    if opts.direct_shelling_check {
        if let ShellingSearch::NotShellable(proof) =
            find_shelling(&deletion, &ShellingOptions::default())?
        {
            rec.deletion_shelling = Some(proof);
        }
    }
    let reisner_fails = rec.reisner.iter().any(|r| r.witness.is_some());
    let structure_ok = rec.c16_deletion_pure == Some(true)
        && rec.deletion_is_f0_plus_c16_deletion == Some(true);
    rec.justification = if (reisner_fails && structure_ok) || rec.deletion_shelling.is_some() {
        Justification::DeletionNotShellable
    } else {
        Justification::Unrefuted
    };
    Ok(rec)
}

impl G26Refutation {
    /// Re-derives every recorded claim from `g26` and returns the verdict it proves.
    pub fn replay(&self, g26: &Graph) -> Result<bool> {
        let bad = |x: usize, msg: &str| Err(Error::Parse(format!("vertex x{x}: {msg}")));
        if !same_graph(g26, &fixtures::g26()) {
            return Err(Error::FixtureMismatch("graph differs from the fixture".into()));
        }
        let covered: VertexSet = self.vertices.iter().map(|v| v.vertex - 1).collect();
        if covered != VertexSet::full(26) || self.vertices.len() != 26 {
            return Err(Error::Parse("refutation must cover all 26 vertices".into()));
        }
        let ind = SimplicialComplex::independence_complex(g26);
        let ind_c16 = SimplicialComplex::independence_complex(&fixtures::c16());
        let mut listed = fixtures::listed_g26_order().0;
        listed.sort();
        let f0 = labels(&fixtures::G26_F0);
        let mut all = true;
        for rec in &self.vertices {
            let x = rec.vertex - 1;
            let single = VertexSet::singleton(x);
            if let Some(f) = &rec.new_facet {
                let f = labels(f);
                let del = ind.deletion(single);
                if del.facets().binary_search(&f).is_err() || listed.binary_search(&f).is_ok() {
                    return bad(rec.vertex, "recorded new facet is wrong");
                }
            }
            let ok = match rec.justification {
                Justification::NotShedding => match &rec.not_shedding_witness {
                    Some(w) => check_shedding_witness(g26, x, labels(w)),
                    None => false,
                },
                Justification::DeletionNotVd => {
                    let (v, _) = is_vertex_decomposable(&g26.delete_vertex(x), &VdOptions::default());
                    v == VdVerdict::NotDecomposable
                }
                Justification::DeletionNotShellable => {
                    let c16_del = ind_c16.deletion(single);
                    let mut expected: Vec<VertexSet> = c16_del.facets().to_vec();
                    expected.push(f0);
                    expected.sort();
                    let structure = c16_del.is_pure() && ind.deletion(single).facets() == expected;
                    let reisner = rec.reisner.iter().any(|r| {
                        r.witness.as_ref().is_some_and(|w| {
                            replay_reisner_witness(&c16_del, r.characteristic, w).unwrap_or(false)
                        })
                    });
                    structure && reisner
                }
                Justification::Unrefuted => false,
            };
            if !ok && rec.justification != Justification::Unrefuted {
                return bad(rec.vertex, "justification does not hold");
            }
            all &= ok;
        }
        if all != self.not_vertex_decomposable {
            return Err(Error::Parse("overall verdict does not follow".into()));
        }
        Ok(all)
    }
}

fn replay_reisner_witness(
    delta: &SimplicialComplex,
    characteristic: u64,
    w: &ReisnerWitness,
) -> Result<bool> {
    let face = labels(&w.face);
    let link = delta.link(face)?;
    let h = reduced_homology_dims(&link, FieldSpec::new(characteristic)?)?;
    Ok(link.dimension() == Some(w.link_dimension)
        && w.degree < w.link_dimension
        && h.get(&w.degree) == Some(&w.rank)
        && w.rank > 0)
}
