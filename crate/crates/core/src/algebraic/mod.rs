//! Algebraic k-path detection over GF(2^s).
//!
//! Each k-walk `v_1..v_k` together with a bijective labeling `l: [k] → [k]`
//! contributes the monomial `Π x_{v_i v_{i+1}} · Π y_{v_i, l(i)}`. Summed
//! over all walks and labelings, the terms of every non-simple walk pair up
//! and cancel in characteristic 2, so the polynomial is nonzero exactly when
//! a k-path exists. Its degree is `2k − 1`; evaluating at a uniform point
//! of a field with at least `4k` elements detects a nonzero polynomial
//! with probability above 1/2.
//!
//! Evaluation avoids enumerating labelings: for a label set `X`, summing
//! over all functions `[k] → X` factorizes per vertex, and the
//! inclusion-exclusion over `X ⊆ [k]` (signs vanish mod 2) keeps only the
//! surjective, hence bijective, labelings.

mod field;

use std::ops::ControlFlow;
use std::time::Instant;

use itertools::Itertools;
use rand::Rng;
use thiserror::Error;

pub use field::{field_make, is_irreducible, FieldElement, FieldError, FieldSpec};

use crate::graph::{for_each_k_path, Graph};
use crate::report::{Algorithm, Decision, TrialReport};
use crate::rng::trial_rng;

/// Default number of independent evaluations; the false-negative rate is
/// below `2^-20`.
pub const DEFAULT_TRIALS: u64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignmentError {
    #[error("expected {expected} arc values, got {got}")]
    ArcCount { expected: usize, got: usize },
    #[error("expected {expected} vertex-label values, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A point at which to evaluate the walk polynomial: one value per arc and
/// one per (vertex, label) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    spec: FieldSpec,
    k: usize,
    /// Indexed by arc index (see [`Graph::arcs`]).
    x: Vec<FieldElement>,
    /// Row-major `n × k`; column `j` holds label `j + 1`.
    y: Vec<FieldElement>,
}

impl Assignment {
    pub fn new(
        g: &Graph,
        k: usize,
        spec: FieldSpec,
        x: Vec<FieldElement>,
        y: Vec<FieldElement>,
    ) -> Result<Self, AssignmentError> {
        if x.len() != g.arc_count() {
            return Err(AssignmentError::ArcCount {
                expected: g.arc_count(),
                got: x.len(),
            });
        }
        if y.len() != g.n() * k {
            return Err(AssignmentError::LabelCount {
                expected: g.n() * k,
                got: y.len(),
            });
        }
        for &e in x.iter().chain(&y) {
            if e.degree() != spec.degree() {
                return Err(FieldError::MixedFields(spec.degree(), e.degree()).into());
            }
        }
        Ok(Assignment { spec, k, x, y })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Value of `x` on the arc with the given index.
    pub fn x_arc(&self, arc: usize) -> FieldElement {
        self.x[arc]
    }

    /// Value of `x_{u,v}`, if `(u, v)` is an arc of `g`.
    pub fn x(&self, g: &Graph, u: usize, v: usize) -> Option<FieldElement> {
        g.arc_index(u, v).map(|i| self.x[i])
    }

    /// Value of `y_{v,label}` for `label` in `1..=k`.
    pub fn y(&self, v: usize, label: usize) -> FieldElement {
        assert!((1..=self.k).contains(&label));
        self.y[v * self.k + label - 1]
    }
}

/// Every variable drawn independently and uniformly from the whole field.
pub fn random_assignment<R: Rng + ?Sized>(
    g: &Graph,
    k: usize,
    spec: FieldSpec,
    rng: &mut R,
) -> Assignment {
    let x = (0..g.arc_count()).map(|_| spec.random(rng)).collect();
    let y = (0..g.n() * k).map(|_| spec.random(rng)).collect();
    Assignment { spec, k, x, y }
}

/// `P_X`: the sum over k-walks and over all labelings `[k] → X` of the walk
/// monomial. `labels` is a bit mask where bit `j − 1` selects label `j`.
///
/// With `z_v = Σ_{j∈X} y_{v,j}` the labelings factor out per vertex:
/// `D_1[v] = z_v`, `D_{i+1}[w] = z_w · Σ_{(v,w)} x_{vw} · D_i[v]`, and the
/// value is `Σ_v D_k[v]`. That is `O(k·m)` multiplications.
pub fn eval_px(g: &Graph, k: usize, labels: u64, asg: &Assignment) -> FieldElement {
    assert!(k >= 1);
    assert_eq!(asg.k, k, "assignment built for a different k");
    let spec = asg.spec;
    let n = g.n();
    let z: Vec<u32> = (0..n)
        .map(|v| {
            (0..k)
                .filter(|j| labels >> j & 1 == 1)
                .fold(0, |acc, j| acc ^ asg.y[v * k + j].bits())
        })
        .collect();
    let mut cur = z.clone();
    let mut next = vec![0u32; n];
    for _ in 1..k {
        next.iter_mut().for_each(|d| *d = 0);
        for (v, &cv) in cur.iter().enumerate() {
            if cv == 0 {
                continue;
            }
            for (arc, &w) in g.out_arc_range(v).zip(g.neighbors_out(v)) {
                next[w] ^= spec.mul_bits(asg.x[arc].bits(), cv);
            }
        }
        for (d, &zw) in next.iter_mut().zip(&z) {
            *d = spec.mul_bits(*d, zw);
        }
        std::mem::swap(&mut cur, &mut next);
    }
    spec.wrap(cur.iter().fold(0, |acc, &d| acc ^ d))
}

/// The walk polynomial at `asg`: `Σ_{X ⊆ [k]} P_X` in GF(2^s).
pub fn eval_p(g: &Graph, k: usize, asg: &Assignment) -> FieldElement {
    assert!((1..64).contains(&k));
    let total = (1u64..1 << k).fold(0u32, |acc, labels| acc ^ eval_px(g, k, labels, asg).bits());
    asg.spec.wrap(total)
}

/// Direct summation of the walk polynomial restricted to simple paths:
/// every k-path sequence times every bijective labeling. Factorial cost;
/// intended for `n ≤ 6`, `k ≤ 4`.
pub fn brute_eval_p(g: &Graph, k: usize, asg: &Assignment) -> FieldElement {
    assert_eq!(asg.k, k);
    let spec = asg.spec;
    let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    let mut total = spec.zero();
    let _ = for_each_k_path(g, k, |seq| {
        let xs = seq
            .windows(2)
            .map(|w| asg.x(g, w[0], w[1]).expect("path arc"))
            .fold(spec.one(), |acc, x| spec.mul(acc, x));
        for sigma in &perms {
            let ys = seq
                .iter()
                .zip(sigma)
                .map(|(&v, &label)| asg.y(v, label + 1))
                .fold(spec.one(), |acc, y| spec.mul(acc, y));
            total = spec.add(total, spec.mul(xs, ys));
        }
        ControlFlow::Continue(())
    });
    total
}

/// Up to `trials` evaluations at independent random points; YES on the
/// first nonzero value. No-instances always answer NO.
pub fn williams_decide(
    g: &Graph,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<TrialReport, FieldError> {
    assert!(trials >= 1);
    assert!(k >= 1);
    let started = Instant::now();
    let spec = field_make(k)?;
    let mut report = TrialReport::new(Algorithm::Algebraic, k, seed, started);
    for t in 0..trials {
        let asg = random_assignment(g, k, spec, &mut trial_rng(seed, t));
        if !eval_p(g, k, &asg).is_zero() {
            report.trials_run = t + 1;
            report.decision = Decision::Yes;
            return Ok(report.finish(started));
        }
    }
    report.trials_run = trials;
    Ok(report.finish(started))
}
