//! The verification suite: every structural identity of the group, its
//! representations and the wavelet transforms, checked on one configuration.
//!
//! Checks are grouped into families. A family only runs when the families it
//! builds on have passed, so a broken action table fails the `action` family
//! and leaves everything downstream `skipped`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::Action;
use crate::harness::config::Config;
use crate::heisenberg::{GwhElement, GwhGroup, PhaseSlot, SemidirectElement};
use crate::repr::{
    commutant_dimension, commutant_of, direct_sum, fourier_k, fourier_quasi, generator_matrices, intertwiner_check,
    inverse_fourier_k, inverse_fourier_quasi, monomial_commutant_dimension, rep_apply, rep_monomial, Monomial, Rep,
    Space, StateVector, COMMUTANT_CAP, MATRIX_CAP,
};
use crate::wavelet::{
    calderon_function, calderon_values, cwt, cwt_rho_fourier_table, energy_identity_residual, gaussian_window,
    orthogonality_sum, reconstruct,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Passed, but the value reported is a measurement rather than a claim.
    Informative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Action,
    Structure,
    Representation,
    Wavelet,
}

impl Family {
    fn prerequisites(self) -> &'static [Family] {
        match self {
            Family::Action => &[],
            Family::Structure => &[Family::Action],
            Family::Representation => &[Family::Action, Family::Structure],
            Family::Wavelet => &[Family::Action, Family::Structure, Family::Representation],
        }
    }
}

/// Deliberate corruptions for negative-control runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// One automorphism table is swapped out so `h -> tau_h` stops being a homomorphism.
    ActionTable,
    /// The phase of the product law reads `k2` instead of `k1`.
    ProductLaw,
}

impl Fault {
    pub fn family(self) -> Family {
        match self {
            Fault::ActionTable => Family::Action,
            Fault::ProductLaw => Family::Structure,
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fault::ActionTable => "action-table",
            Fault::ProductLaw => "product-law",
        })
    }
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "action-table" => Ok(Fault::ActionTable),
            "product-law" => Ok(Fault::ProductLaw),
            other => Err(Error::Config { field: "inject-fault".into(), message: format!("unknown fault `{other}`") }),
        }
    }
}

/// How many random samples each check draws.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Samples {
    pub orthogonality_pairs: usize,
    /// Pairs checked when `|G|` exceeds `exhaustive_limit`.
    pub homomorphism_pairs: usize,
    pub exhaustive_limit: usize,
    pub associativity_triples: usize,
    pub invariance_shifts: usize,
    pub reconstruction_signals: usize,
    pub intertwining_shifts: usize,
    pub fourier_pairs: usize,
    pub calderon_pairs: usize,
}

impl Default for Samples {
    fn default() -> Self {
        Self {
            orthogonality_pairs: 100,
            homomorphism_pairs: 2000,
            exhaustive_limit: 1024,
            associativity_triples: 2000,
            invariance_shifts: 20,
            reconstruction_signals: 10,
            intertwining_shifts: 50,
            fourier_pairs: 20,
            calderon_pairs: 20,
        }
    }
}

impl Samples {
    /// A light run for smoke tests.
    pub fn quick() -> Self {
        Self {
            orthogonality_pairs: 5,
            homomorphism_pairs: 200,
            exhaustive_limit: 64,
            associativity_triples: 200,
            invariance_shifts: 3,
            reconstruction_signals: 2,
            intertwining_shifts: 5,
            fourier_pairs: 2,
            calderon_pairs: 2,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub seed: Option<u64>,
    pub tolerance: Option<f64>,
    /// Run with `mu_H(H) = |H|`.
    pub mass_scaled: bool,
    pub fault: Option<Fault>,
    pub samples: Samples,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub family: Family,
    pub status: Status,
    pub max_residual: Option<f64>,
    pub count: usize,
    pub details: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub config_name: Option<String>,
    pub config_hash: String,
    pub seed: u64,
    pub tolerance: f64,
    pub mu_h_total: f64,
    pub orders: Vec<i64>,
    pub h_order: usize,
    pub k_size: usize,
    pub torus_order: usize,
    pub group_size: usize,
    pub haar_total_mass: f64,
    pub fault: Option<Fault>,
    pub element_index: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub status: Status,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub informative: usize,
    pub failed_families: Vec<Family>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub environment: Environment,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// A vector with entries uniform in the unit square.
pub fn random_state(group: &GwhGroup, space: Space, rng: &mut impl Rng) -> StateVector {
    let values = (0..space.dim(group)).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    StateVector::new(group, space, values).expect("dimension matches space")
}

pub fn random_element(group: &GwhGroup, rng: &mut impl Rng) -> GwhElement {
    group.element(rng.gen_range(0..group.size()))
}

/// Result of a single check body.
#[derive(Default)]
struct Outcome {
    residual: Option<f64>,
    /// Number of violations for combinatorial checks.
    failures: Option<usize>,
    count: usize,
    informative: bool,
    details: BTreeMap<String, Value>,
}

impl Outcome {
    fn residual(residual: f64, count: usize) -> Self {
        Self { residual: Some(residual), count, ..Self::default() }
    }

    fn failures(failures: usize, count: usize) -> Self {
        Self { residual: Some(failures as f64), failures: Some(failures), count, ..Self::default() }
    }

    fn detail(mut self, key: &str, value: impl Serialize) -> Self {
        self.details.insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }
}

struct Runner {
    tol: f64,
    rng: ChaCha8Rng,
    checks: Vec<CheckResult>,
    failed: BTreeSet<Family>,
}

impl Runner {
    fn run(&mut self, name: &str, family: Family, body: impl FnOnce(&mut ChaCha8Rng, f64) -> Result<Outcome>) {
        let mut result = CheckResult {
            name: name.into(),
            family,
            status: Status::Skipped,
            max_residual: None,
            count: 0,
            details: BTreeMap::new(),
        };
        if family.prerequisites().iter().any(|f| self.failed.contains(f)) {
            result.details.insert("reason".into(), json!("prerequisite family failed"));
            self.checks.push(result);
            return;
        }
        match body(&mut self.rng, self.tol) {
            Ok(out) => {
                let ok = match (out.failures, out.residual) {
                    (Some(n), _) => n == 0,
                    (None, Some(r)) => r <= self.tol,
                    (None, None) => true,
                };
                result.status = match (ok, out.informative) {
                    (false, _) => Status::Fail,
                    (true, true) => Status::Informative,
                    (true, false) => Status::Pass,
                };
                result.max_residual = out.residual;
                result.count = out.count;
                result.details = out.details;
            }
            Err(e) => {
                result.status = Status::Fail;
                result.details.insert("error".into(), json!(e.to_string()));
            }
        }
        if result.status == Status::Fail {
            self.failed.insert(family);
        }
        self.checks.push(result);
    }
}

/// Replaces the table of the last acting element: by `k -> -k` when that
/// element is the identity, otherwise by the identity map.
fn corrupt(action: &Action) -> Action {
    let acting = action.acting().clone();
    let k = action.group().clone();
    let mut tables: Vec<Vec<usize>> = (0..acting.order()).map(|h| action.automorphism(h).to_vec()).collect();
    let last = acting.order() - 1;
    let identity: Vec<usize> = (0..k.size()).collect();
    let negation: Vec<usize> = (0..k.size()).map(|i| k.neg(i)).collect();
    tables[last] = if last == acting.identity() {
        if negation != identity {
            negation
        } else {
            let mut t = identity;
            if t.len() > 2 {
                t.swap(1, 2);
            } else if t.len() == 2 {
                t.swap(0, 1);
            }
            t
        }
    } else {
        identity
    };
    Action::new_unchecked(acting, k, tables)
}

/// Builds the group a verification run works on, applying the run options.
pub fn build_run_group(cfg: &Config, opts: &VerifyOptions) -> Result<(Config, GwhGroup)> {
    let mut cfg = cfg.clone();
    if let Some(seed) = opts.seed {
        cfg.seed = seed;
    }
    if let Some(tol) = opts.tolerance {
        cfg.tolerance = tol;
    }
    let action = cfg.build_action()?;
    if opts.mass_scaled {
        cfg.normalization.mu_h_total = action.acting().order() as f64;
    }
    let action = match opts.fault {
        Some(Fault::ActionTable) => corrupt(&action),
        _ => action,
    };
    let mut group = cfg.build_with(action)?;
    if opts.fault == Some(Fault::ProductLaw) {
        group = group.with_phase_slot(PhaseSlot::Right);
    }
    Ok((cfg, group))
}

/// Runs the whole suite. Output depends only on the config and options.
pub fn run_verify(cfg: &Config, opts: &VerifyOptions) -> Result<VerificationReport> {
    let (cfg, group) = build_run_group(cfg, opts)?;
    let s = opts.samples;
    let g = &group;
    let mut r = Runner { tol: cfg.tolerance, rng: ChaCha8Rng::seed_from_u64(cfg.seed), checks: vec![], failed: BTreeSet::new() };

    r.run("action_homomorphism", Family::Action, |_, _| Ok(action_homomorphism(g)));
    r.run("action_automorphisms", Family::Action, |_, _| {
        Ok(Outcome::failures(g.action().automorphism_failures(), g.h_order()))
    });
    r.run("dual_action", Family::Action, |_, _| Ok(dual_action_check(g)));

    r.run("group_axioms", Family::Structure, |rng, _| Ok(group_axioms(g, s, rng)));
    r.run("theta_homomorphism", Family::Structure, |_, _| Ok(theta_homomorphism(g)));
    r.run("left_invariance", Family::Structure, |rng, _| Ok(invariance(g, s, rng, false)));
    r.run("unimodularity", Family::Structure, |rng, _| Ok(invariance(g, s, rng, true)));
    r.run("haar_total_mass", Family::Structure, |_, _| Ok(haar_total(g)));
    r.run("plancherel", Family::Structure, |rng, _| plancherel(g, rng));

    for rep in Rep::ALL {
        r.run(&format!("unitarity_homomorphism_{}", rep.name()), Family::Representation, |rng, _| {
            Ok(unitarity_homomorphism(g, rep, s, rng))
        });
    }
    r.run("intertwiner", Family::Representation, |_, _| {
        let rep = intertwiner_check(g, MATRIX_CAP)?;
        Ok(Outcome::residual(rep.max_deviation, rep.generators_checked)
            .detail("direction_used", rep.direction_used)
            .detail("forward_deviation", rep.forward_deviation)
            .detail("adjoint_deviation", rep.adjoint_deviation))
    });
    r.run("commutant_pi", Family::Representation, |_, _| commutant_pi(g));
    r.run("commutant_control", Family::Representation, |_, _| commutant_control(g));

    r.run("orthogonality_relation", Family::Wavelet, |rng, _| orthogonality(g, s.orthogonality_pairs, rng));
    r.run("orthogonality_mass_scaled", Family::Wavelet, |rng, _| {
        let scaled = g.clone().with_weights(g.weights().with_h_mass(g.h_order(), g.h_order() as f64));
        let mut out = orthogonality(&scaled, s.orthogonality_pairs, rng)?;
        out.informative = true;
        Ok(out)
    });
    r.run("cwt_isometry", Family::Wavelet, |rng, _| cwt_isometry(g, s.reconstruction_signals, rng));
    r.run("cwt_reconstruction", Family::Wavelet, |rng, _| cwt_reconstruction(g, s.reconstruction_signals, rng));
    r.run("cwt_intertwining", Family::Wavelet, |rng, _| cwt_intertwining(g, s.intertwining_shifts, rng));
    r.run("fourier_side_agreement", Family::Wavelet, |rng, _| fourier_side(g, s.fourier_pairs, rng));
    r.run("calderon_energy", Family::Wavelet, |rng, _| calderon_energy(g, s.calderon_pairs, rng));
    r.run("calderon_spread", Family::Wavelet, |_, tol| {
        let rep = calderon_function(g, &gaussian_window(g, Space::Quasi), &[], tol)?;
        let mut out = Outcome::residual(rep.theta_transport_residual, rep.calderon.len())
            .detail("window", "gaussian")
            .detail("spread", rep.spread)
            .detail("min", rep.min)
            .detail("max", rep.max)
            .detail("is_constant", rep.is_constant)
            .detail("c_psi", rep.c_psi);
        out.informative = true;
        Ok(out)
    });

    let count = |st: Status| r.checks.iter().filter(|c| c.status == st).count();
    let summary = Summary {
        status: if r.failed.is_empty() { Status::Pass } else { Status::Fail },
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        informative: count(Status::Informative),
        failed_families: r.failed.iter().copied().collect(),
    };
    let environment = Environment {
        config_name: cfg.name.clone(),
        config_hash: cfg.hash(),
        seed: cfg.seed,
        tolerance: cfg.tolerance,
        mu_h_total: g.h_mass(),
        orders: cfg.orders.clone(),
        h_order: g.h_order(),
        k_size: g.k_size(),
        torus_order: g.torus_order(),
        group_size: g.size(),
        haar_total_mass: g.total_mass(),
        fault: opts.fault,
        element_index: "[h, k, a, zidx], lexicographic with zidx fastest".into(),
    };
    Ok(VerificationReport { environment, checks: r.checks, summary })
}

fn action_homomorphism(g: &GwhGroup) -> Outcome {
    let act = g.action();
    let h = g.acting();
    let n = g.k_size();
    let mut bad = 0;
    for h1 in 0..h.order() {
        for h2 in 0..h.order() {
            let p = h.mul(h1, h2);
            if (0..n).any(|k| act.tau(p, k) != act.tau(h1, act.tau(h2, k))) {
                bad += 1;
            }
        }
    }
    let id_ok = (0..n).all(|k| act.tau(h.identity(), k) == k);
    Outcome::failures(bad + usize::from(!id_ok), h.order() * h.order()).detail("identity_acts_trivially", id_ok)
}

/// Cocycle identity of the dual action and `omega_h(k) = omega(tau_{h^-1} k)`.
fn dual_action_check(g: &GwhGroup) -> Outcome {
    let act = g.action();
    let kg = g.k_group();
    let n = kg.size();
    let mut bad = act.cocycle_failures();
    for h in 0..g.h_order() {
        let hinv = g.acting().inv(h);
        for a in 0..n {
            bad += (0..n).filter(|&k| kg.pairing(act.dual(h, a), k) != kg.pairing(a, act.tau(hinv, k))).count();
        }
    }
    Outcome::failures(bad, g.h_order() * n * n)
}

fn group_axioms(g: &GwhGroup, s: Samples, rng: &mut ChaCha8Rng) -> Outcome {
    let e = g.identity();
    let (ident, inv) = (0..g.size())
        .into_par_iter()
        .map(|i| {
            let x = g.element(i);
            let xi = g.gwh_inv(&x);
            let id_bad = g.gwh_mul(&e, &x) != x || g.gwh_mul(&x, &e) != x;
            let inv_bad = g.gwh_mul(&x, &xi) != e || g.gwh_mul(&xi, &x) != e;
            (usize::from(id_bad), usize::from(inv_bad))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let gens = g.generators();
    let mut triples: Vec<[GwhElement; 3]> = Vec::new();
    for a in &gens {
        for b in &gens {
            for c in &gens {
                triples.push([*a, *b, *c]);
            }
        }
    }
    for _ in 0..s.associativity_triples {
        triples.push([random_element(g, rng), random_element(g, rng), random_element(g, rng)]);
    }
    let assoc = triples
        .iter()
        .filter(|[a, b, c]| g.gwh_mul(&g.gwh_mul(a, b), c) != g.gwh_mul(a, &g.gwh_mul(b, c)))
        .count();
    Outcome::failures(ident + inv + assoc, 2 * g.size() + triples.len())
        .detail("identity_failures", ident)
        .detail("inverse_failures", inv)
        .detail("associativity_failures", assoc)
        .detail("associativity_triples", triples.len())
}

fn theta_homomorphism(g: &GwhGroup) -> Outcome {
    let nk = g.k_size();
    let m = g.torus_order();
    let sd: Vec<SemidirectElement> =
        (0..g.semidirect_size()).map(|i| SemidirectElement { h: i / nk, k: i % nk }).collect();
    let bad: usize = sd
        .par_iter()
        .map(|&x1| {
            let mut bad = 0;
            for &x2 in &sd {
                let x12 = g.sd_mul(x1, x2);
                for a in 0..nk {
                    for z in 0..m {
                        let (a2, z2) = g.theta_apply(x2, a, z);
                        if g.theta_apply(x12, a, z) != g.theta_apply(x1, a2, z2) {
                            bad += 1;
                        }
                    }
                }
            }
            bad
        })
        .sum();
    Outcome::failures(bad, sd.len() * sd.len() * nk * m)
}

/// Left invariance of the Haar sum, or with `unimodular` set, right and
/// inversion invariance plus `delta == 1`.
fn invariance(g: &GwhGroup, s: Samples, rng: &mut ChaCha8Rng, unimodular: bool) -> Outcome {
    let f: Vec<f64> = (0..g.size()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let w = g.point_weight();
    let total: f64 = f.iter().sum::<f64>() * w;
    let scale: f64 = f.iter().map(|v| v.abs()).sum::<f64>() * w;
    let mut worst = 0.0f64;
    let mut not_bijective = 0;
    let mut shifted_sum = |map: &dyn Fn(&GwhElement) -> GwhElement| {
        let mut seen = vec![false; g.size()];
        let mut sum = 0.0;
        for i in 0..g.size() {
            let j = g.index_of(&map(&g.element(i)));
            if std::mem::replace(&mut seen[j], true) {
                not_bijective += 1;
            }
            sum += f[j];
        }
        worst = worst.max((sum * w - total).abs() / scale);
    };
    let mut count = 0;
    if unimodular {
        shifted_sum(&|x| g.gwh_inv(x));
        count += 1;
    }
    for _ in 0..s.invariance_shifts {
        let g0 = random_element(g, rng);
        if unimodular {
            shifted_sum(&|x| g.gwh_mul(x, &g0));
        } else {
            shifted_sum(&|x| g.gwh_mul(&g0, x));
        }
        count += 1;
    }
    let mut out = Outcome::residual(worst, count);
    if unimodular {
        let delta_dev = (0..g.h_order()).map(|h| (g.action().delta(h) - 1.0).abs()).fold(0.0, f64::max);
        out.residual = Some(worst.max(delta_dev));
        out = out.detail("delta_deviation", delta_dev);
    }
    if not_bijective > 0 {
        out.failures = Some(not_bijective);
    }
    out.detail("non_bijective_translations", not_bijective)
}

fn haar_total(g: &GwhGroup) -> Outcome {
    let w = g.weights();
    let n = g.k_size() as f64;
    let m = g.torus_order() as f64;
    let expected = g.h_mass() * (w.w_k * n) * (w.w_kdual * n) * (w.w_t * m);
    let summed: f64 = g.elements().map(|x| g.haar_weight(&x)).sum();
    Outcome::residual((summed - expected).abs() / expected, g.size())
        .detail("total", summed)
        .detail("mu_H_total", g.h_mass())
}

fn plancherel(g: &GwhGroup, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut worst = 0.0f64;
    let trials = 5;
    for _ in 0..trials {
        let f = random_state(g, Space::Group, rng);
        let fh = fourier_k(g, &f)?;
        let back = inverse_fourier_k(g, &fh)?;
        worst = worst.max((fh.norm_sqr() - f.norm_sqr()).abs() / f.norm_sqr());
        worst = worst.max(back.distance(&f) / f.norm());
        let q = random_state(g, Space::Quasi, rng);
        let qh = fourier_quasi(g, &q)?;
        let qback = inverse_fourier_quasi(g, &qh)?;
        worst = worst.max((qh.norm_sqr() - q.norm_sqr()).abs() / q.norm_sqr());
        worst = worst.max(qback.distance(&q) / q.norm());
    }
    Ok(Outcome::residual(worst, 2 * trials))
}

fn unitarity_homomorphism(g: &GwhGroup, rep: Rep, s: Samples, rng: &mut ChaCha8Rng) -> Outcome {
    let f = random_state(g, rep.space(), rng);
    let fnorm = f.norm_sqr();
    let (norm_dev, non_perm) = (0..g.size())
        .into_par_iter()
        .map(|i| {
            let mono = rep_monomial(g, rep, &g.element(i));
            let moved = mono.apply(f.values());
            let n2: f64 = moved.iter().map(|v| v.norm_sqr()).sum::<f64>() * f.weight();
            ((n2 - fnorm).abs() / fnorm, usize::from(!mono.is_permutation()))
        })
        .reduce(|| (0.0, 0), |a, b| (a.0.max(b.0), a.1 + b.1));
    let exhaustive = g.size() <= s.exhaustive_limit;
    let hom_dev = if exhaustive {
        let monos: Vec<Monomial> = (0..g.size()).into_par_iter().map(|i| rep_monomial(g, rep, &g.element(i))).collect();
        (0..g.size())
            .into_par_iter()
            .map(|i| {
                let x = g.element(i);
                let mut worst = 0.0f64;
                for j in 0..g.size() {
                    let y = g.element(j);
                    let p = g.index_of(&g.gwh_mul(&x, &y));
                    worst = worst.max(monos[i].compose(&monos[j]).deviation(&monos[p]));
                }
                worst
            })
            .reduce(|| 0.0, f64::max)
    } else {
        let pairs: Vec<(GwhElement, GwhElement)> =
            (0..s.homomorphism_pairs).map(|_| (random_element(g, rng), random_element(g, rng))).collect();
        pairs
            .par_iter()
            .map(|(x, y)| {
                let xy = g.gwh_mul(x, y);
                rep_monomial(g, rep, x).compose(&rep_monomial(g, rep, y)).deviation(&rep_monomial(g, rep, &xy))
            })
            .reduce(|| 0.0, f64::max)
    };
    let pairs = if exhaustive { g.size() * g.size() } else { s.homomorphism_pairs };
    let mut out = Outcome::residual(norm_dev.max(hom_dev), pairs)
        .detail("norm_deviation", norm_dev)
        .detail("homomorphism_deviation", hom_dev)
        .detail("exhaustive", exhaustive)
        .detail("non_permutation_operators", non_perm);
    if non_perm > 0 {
        out.failures = Some(non_perm);
    }
    out
}

fn commutant_pi(g: &GwhGroup) -> Result<Outcome> {
    let dim = commutant_dimension(g, Rep::Pi, COMMUTANT_CAP)?;
    let mats = generator_matrices(g, Rep::Pi);
    let monos: Vec<Monomial> = g.generators().iter().map(|x| rep_monomial(g, Rep::Pi, x)).collect();
    let orbit = if monos.is_empty() { dim } else { monomial_commutant_dimension(&monos)? };
    let mut out = Outcome::failures(usize::from(dim != 1) + usize::from(orbit != dim), mats.len())
        .detail("dimension", dim)
        .detail("orbit_count", orbit);
    if let Ok(rep) = commutant_of(&mats) {
        out = out.detail("sigma_max", rep.sigma_max).detail("smallest_nonzero", rep.smallest_nonzero);
    }
    Ok(out)
}

/// `pi (+) pi` must have a four-dimensional commutant.
fn commutant_control(g: &GwhGroup) -> Result<Outcome> {
    let monos: Vec<Monomial> = g.generators().iter().map(|x| rep_monomial(g, Rep::Pi, x)).collect();
    if monos.is_empty() {
        return Ok(Outcome::failures(0, 0).detail("dimension", 4));
    }
    let doubled: Vec<Monomial> = monos.iter().map(|m| m.direct_sum(m)).collect();
    let orbit = monomial_commutant_dimension(&doubled)?;
    let numerical = if 2 * g.k_size() <= COMMUTANT_CAP {
        let mats: Vec<_> = monos.iter().map(|m| m.to_matrix()).map(|m| direct_sum(&m, &m)).collect();
        Some(commutant_of(&mats)?.dimension)
    } else {
        None
    };
    let bad = usize::from(orbit != 4) + usize::from(numerical.is_some_and(|d| d != 4));
    Ok(Outcome::failures(bad, doubled.len()).detail("orbit_count", orbit).detail("numerical", numerical))
}

fn orthogonality(g: &GwhGroup, pairs: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mass = g.h_mass();
    let mut worst = 0.0f64;
    let mut ratio_sum = 0.0;
    for _ in 0..pairs {
        let phi = random_state(g, Space::Dual, rng);
        let psi = random_state(g, Space::Dual, rng);
        let norms = phi.norm_sqr() * psi.norm_sqr();
        let sum = orthogonality_sum(g, &phi, &psi)?;
        worst = worst.max((sum - norms * mass).abs() / (norms * mass));
        ratio_sum += sum / norms;
    }
    let mut out = Outcome::residual(worst, pairs)
        .detail("mu_H_total", mass)
        .detail("constant", if pairs > 0 { ratio_sum / pairs as f64 } else { mass });
    out.informative = (mass - 1.0).abs() > 1e-12;
    Ok(out)
}

fn cwt_isometry(g: &GwhGroup, signals: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for rep in [Rep::Pi, Rep::PiTilde] {
        let psi = random_state(g, rep.space(), rng).normalized();
        for _ in 0..signals {
            let f = random_state(g, rep.space(), rng);
            let e = cwt(g, rep, &psi, &f)?.energy();
            let expected = g.h_mass() * f.norm_sqr();
            worst = worst.max((e - expected).abs() / expected);
        }
    }
    Ok(Outcome::residual(worst, 2 * signals))
}

fn cwt_reconstruction(g: &GwhGroup, signals: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut out = Outcome::residual(0.0, 0);
    let mut worst = 0.0f64;
    for rep in Rep::ALL {
        let psi = random_state(g, rep.space(), rng);
        let mut rep_worst = 0.0f64;
        for _ in 0..signals {
            let f = random_state(g, rep.space(), rng);
            let back = reconstruct(g, rep, &psi, &cwt(g, rep, &psi, &f)?)?;
            rep_worst = rep_worst.max(back.distance(&f) / f.norm());
        }
        worst = worst.max(rep_worst);
        out = out.detail(rep.name(), rep_worst);
    }
    out.residual = Some(worst);
    out.count = 3 * signals;
    Ok(out)
}

/// `W_psi(rep(g0) f)(g) = W_psi f(g0^-1 g)` over all `g`.
fn cwt_intertwining(g: &GwhGroup, shifts: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for rep in Rep::ALL {
        let psi = random_state(g, rep.space(), rng);
        let f = random_state(g, rep.space(), rng);
        let scale = psi.norm() * f.norm();
        let base = cwt(g, rep, &psi, &f)?;
        for _ in 0..shifts {
            let g0 = random_element(g, rng);
            let g0inv = g.gwh_inv(&g0);
            let moved = cwt(g, rep, &psi, &rep_apply(g, rep, &g0, &f)?)?;
            let dev = (0..g.size())
                .map(|i| {
                    let src = g.index_of(&g.gwh_mul(&g0inv, &g.element(i)));
                    (moved.values[i] - base.values[src]).norm()
                })
                .fold(0.0, f64::max);
            worst = worst.max(dev / scale);
        }
    }
    Ok(Outcome::residual(worst, 3 * shifts))
}

fn fourier_side(g: &GwhGroup, pairs: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut worst = 0.0f64;
    for _ in 0..pairs {
        let psi = random_state(g, Space::Quasi, rng);
        let f = random_state(g, Space::Quasi, rng);
        let direct = cwt(g, Rep::Rho, &psi, &f)?;
        let fourier = cwt_rho_fourier_table(g, &psi, &f)?;
        let dev = direct.values.iter().zip(&fourier.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        worst = worst.max(dev / (psi.norm() * f.norm()));
    }
    Ok(Outcome::residual(worst, pairs * g.size()))
}

fn calderon_energy(g: &GwhGroup, pairs: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let mut worst = 0.0f64;
    let mut spread = 0.0f64;
    for _ in 0..pairs {
        let psi = random_state(g, Space::Quasi, rng);
        let f = random_state(g, Space::Quasi, rng);
        let c = calderon_values(g, &psi)?;
        let max = c.iter().copied().fold(0.0, f64::max);
        let min = c.iter().copied().fold(f64::INFINITY, f64::min);
        spread = spread.max((max - min) / max);
        worst = worst.max(energy_identity_residual(g, &psi, &f, &c)?);
    }
    Ok(Outcome::residual(worst, pairs).detail("max_relative_spread", spread))
}
