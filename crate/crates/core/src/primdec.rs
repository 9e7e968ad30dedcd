//! End-to-end primary decomposition and its structural verifier.
//!
//! 1. reduced Gröbner basis and standard-monomial basis of `F_p[x]/I`;
//! 2. `V = Ker(f ↦ f^p − f)`, whose dimension `t` counts the components;
//! 3. the `t` primitive idempotents of `V`;
//! 4. for each idempotent `h`, the component `I : ⟨h⟩^∞`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{intersect, saturate, GroebnerBasis, Ideal};
use crate::idem::{invariant_subspace, split_algebra_with, IdempotentSet, SplitConfig, Subalgebra};
use crate::mpoly::Polynomial;
use crate::quotient::{is_zero_dimensional, macaulay_basis, QuotientBasis, QuotientElement};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecomposeConfig {
    /// Run the per-idempotent saturations on the rayon pool.
    pub parallel: bool,
    pub split: SplitConfig,
}

#[derive(Clone, Debug)]
pub struct Component {
    /// Reduced Gröbner basis is cached on the ideal.
    pub ideal: Ideal,
    /// The idempotent whose saturation produced this component.
    pub idempotent: QuotientElement,
}

impl Component {
    pub fn groebner(&self) -> &GroebnerBasis {
        self.ideal.groebner()
    }

    /// `dim F_p[x]/I_i`, or `None` if the component is not zero-dimensional.
    pub fn quotient_dim(&self) -> Option<usize> {
        macaulay_basis(self.groebner()).ok().map(|qb| qb.dim())
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub input: Ideal,
    pub quotient: Arc<QuotientBasis>,
    pub invariant: Subalgebra,
    pub idempotents: IdempotentSet,
    /// Sorted by the text of their reduced Gröbner bases.
    pub components: Vec<Component>,
}

impl Decomposition {
    pub fn t(&self) -> usize {
        self.idempotents.len()
    }

    /// Normal-form representatives of the idempotents.
    pub fn idempotent_polys(&self) -> Vec<Polynomial> {
        self.idempotents.elements.iter().map(|e| self.quotient.from_coords(e)).collect()
    }
}

pub fn primary_decomposition(i: &Ideal) -> Result<Decomposition> {
    primary_decomposition_with(i, &DecomposeConfig::default())
}

pub fn primary_decomposition_with(i: &Ideal, config: &DecomposeConfig) -> Result<Decomposition> {
    let gb = i.groebner();
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !is_zero_dimensional(gb) {
        return Err(Error::NotZeroDimensional);
    }
    let quotient = Arc::new(macaulay_basis(gb)?);
    let invariant = invariant_subspace(&quotient);
    let idempotents = split_algebra_with(&invariant, &config.split)?;

    let component = |h: &QuotientElement| {
        let g = quotient.from_coords(h);
        let ideal = saturate(i, &g);
        ideal.groebner();
        Component { ideal, idempotent: h.clone() }
    };
    let mut components: Vec<Component> = if config.parallel {
        idempotents.elements.par_iter().map(component).collect()
    } else {
        idempotents.elements.iter().map(component).collect()
    };
    components.sort_by_cached_key(|c| c.groebner().to_string());

    Ok(Decomposition { input: i.clone(), quotient, invariant, idempotents, components })
}

/// Outcome of every structural check; failures carry witnesses where one exists.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub intersection_equals_input: bool,
    /// A basis element of one side not contained in the other.
    pub intersection_witness: Option<Polynomial>,
    /// `comaximal[i][j]`: `I_i + I_j = ⟨1⟩` (diagonal entries are `true`).
    pub comaximal: Vec<Vec<bool>>,
    /// `I ⊆ I_i` per component.
    pub contains_input: Vec<bool>,
    pub input_dim: usize,
    pub component_dims: Vec<Option<usize>>,
    /// Dimension of each component's own invariant subspace (should be 1).
    pub component_invariant_dims: Vec<Option<usize>>,
    pub idempotent_squares: bool,
    pub idempotent_orthogonal: bool,
    pub idempotent_sum_is_one: bool,
    /// `t = dim V = #idempotents = #components`.
    pub counts_agree: bool,
}

impl VerificationReport {
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let dims: Option<usize> = self.component_dims.iter().copied().sum();
        vec![
            ("intersection", self.intersection_equals_input),
            ("comaximal", self.comaximal.iter().flatten().all(|&b| b)),
            ("containment", self.contains_input.iter().all(|&b| b)),
            ("crt_dimension", dims == Some(self.input_dim)),
            ("component_invariant_dim", self.component_invariant_dims.iter().all(|&d| d == Some(1))),
            ("idempotent_square", self.idempotent_squares),
            ("idempotent_orthogonal", self.idempotent_orthogonal),
            ("idempotent_sum", self.idempotent_sum_is_one),
            ("component_count", self.counts_agree),
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }
}

pub fn verify(d: &Decomposition) -> VerificationReport {
    let input = &d.input;
    let comps: Vec<&Ideal> = d.components.iter().map(|c| &c.ideal).collect();
    let t = comps.len();

    let (intersection_equals_input, intersection_witness) = match comps.split_first() {
        None => (false, None),
        Some((first, rest)) => {
            let all = rest.iter().fold((*first).clone(), |acc, c| intersect(&acc, c));
            let missing = all
                .groebner()
                .polys()
                .iter()
                .find(|g| !input.contains(g))
                .or_else(|| input.groebner().polys().iter().find(|g| !all.contains(g)))
                .cloned();
            (missing.is_none() && all.same_as(input), missing)
        }
    };

    let comaximal = (0..t).map(|a| (0..t).map(|b| a == b || comps[a].sum(comps[b]).is_unit()).collect()).collect();
    let contains_input = comps.iter().map(|c| c.contains_ideal(input)).collect();

    let component_bases: Vec<Option<Arc<QuotientBasis>>> =
        comps.iter().map(|c| macaulay_basis(c.groebner()).ok().map(Arc::new)).collect();
    let component_dims = component_bases.iter().map(|b| b.as_ref().map(|b| b.dim())).collect();
    let component_invariant_dims =
        component_bases.iter().map(|b| b.as_ref().map(|b| invariant_subspace(b).dim())).collect();

    let qb = &d.quotient;
    let hs = &d.idempotents.elements;
    let idempotent_squares = hs.iter().all(|h| qb.mul(h, h) == *h);
    let idempotent_orthogonal = hs.iter().enumerate().all(|(i, a)| hs[i + 1..].iter().all(|b| qb.mul(a, b).is_zero()));
    let sum = hs.iter().fold(qb.zero(), |acc, h| qb.add(&acc, h));
    let idempotent_sum_is_one = sum == qb.one();
    let counts_agree = d.invariant.dim() == hs.len() && hs.len() == t;

    VerificationReport {
        intersection_equals_input,
        intersection_witness,
        comaximal,
        contains_input,
        input_dim: qb.dim(),
        component_dims,
        component_invariant_dims,
        idempotent_squares,
        idempotent_orthogonal,
        idempotent_sum_is_one,
        counts_agree,
    }
}
