//! Brute-force reference implementation written directly from the defining
//! formulas: residue vectors, integer matrices and complex exponentials, with
//! no use of the library's tables.

#![allow(dead_code)]

use std::f64::consts::PI;

use gwh::harness::{Config, HSpec};
use gwh::heisenberg::{GwhElement, GwhGroup};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::Value;

pub type C = Complex64;

pub fn golden() -> Value {
    serde_json::from_str(include_str!("../fixtures/golden.json")).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

pub struct Oracle {
    pub orders: Vec<usize>,
    pub m: usize,
    /// Residues of each element of `K`, lexicographic with the last factor fastest.
    pub k: Vec<Vec<usize>>,
    /// Matrix of each acting element, in the library's order of `H`.
    pub h: Vec<Vec<Vec<i64>>>,
    pub mass: f64,
    dual: Vec<Vec<usize>>,
    hinv: Vec<usize>,
    hmul: Vec<Vec<usize>>,
}

impl Oracle {
    pub fn new(cfg: &Config, group: &GwhGroup) -> Self {
        let orders: Vec<usize> = cfg.orders.iter().map(|&n| n as usize).collect();
        let r = orders.len();
        let size: usize = orders.iter().product();
        let k: Vec<Vec<usize>> = (0..size)
            .map(|mut i| {
                let mut res = vec![0; r];
                for j in (0..r).rev() {
                    res[j] = i % orders[j];
                    i /= orders[j];
                }
                res
            })
            .collect();
        let ident: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let gens: Vec<Vec<Vec<i64>>> = match &cfg.h_spec {
            HSpec::Trivial => vec![],
            HSpec::UnitsSubgroup { generators } => generators
                .iter()
                .map(|&u| (0..r).map(|i| (0..r).map(|j| if i == j { u } else { 0 }).collect()).collect())
                .collect(),
            HSpec::MatrixGenerators { generators } => generators.clone(),
        };
        let mut o = Oracle {
            orders,
            m: cfg.torus_order.unwrap(),
            k,
            h: vec![],
            mass: cfg.normalization.mu_h_total,
            dual: vec![],
            hinv: vec![],
            hmul: vec![],
        };
        // closure by brute force, identified by the induced permutation of K
        let mut found = vec![ident];
        let mut i = 0;
        while i < found.len() {
            for g in &gens {
                let p = matmul(&found[i], g);
                if !found.iter().any(|q| o.perm(q) == o.perm(&p)) {
                    found.push(p);
                }
            }
            i += 1;
        }
        assert_eq!(found.len(), group.h_order(), "closure size of H");
        o.h = (0..group.h_order())
            .map(|h| {
                let table = group.action().automorphism(h).to_vec();
                found.iter().find(|q| o.perm(q) == table).expect("library h is a generated matrix").clone()
            })
            .collect();
        o.dual = (0..o.h.len()).map(|h| (0..size).map(|a| o.compose_search(a, h)).collect()).collect();
        let perms: Vec<Vec<usize>> = o.h.iter().map(|q| o.perm(q)).collect();
        let find = |p: Vec<usize>| perms.iter().position(|q| *q == p).unwrap();
        o.hmul = (0..o.h.len()).map(|a| (0..o.h.len()).map(|b| find(o.perm(&matmul(&o.h[a], &o.h[b])))).collect()).collect();
        let e = find((0..size).collect());
        o.hinv = (0..o.h.len()).map(|a| (0..o.h.len()).find(|&b| o.hmul[a][b] == e).unwrap()).collect();
        o
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    pub fn h_order(&self) -> usize {
        self.h.len()
    }

    pub fn encode(&self, res: &[i64]) -> usize {
        res.iter().zip(&self.orders).fold(0, |acc, (&x, &n)| acc * n + x.rem_euclid(n as i64) as usize)
    }

    fn apply(&self, mat: &[Vec<i64>], k: usize) -> usize {
        let v: Vec<i64> =
            mat.iter().map(|row| row.iter().zip(&self.k[k]).map(|(a, &b)| a * b as i64).sum()).collect();
        self.encode(&v)
    }

    fn perm(&self, mat: &[Vec<i64>]) -> Vec<usize> {
        (0..self.n()).map(|k| self.apply(mat, k)).collect()
    }

    pub fn tau(&self, h: usize, k: usize) -> usize {
        self.apply(&self.h[h], k)
    }

    pub fn h_mul(&self, h1: usize, h2: usize) -> usize {
        self.hmul[h1][h2]
    }

    pub fn h_inv(&self, h: usize) -> usize {
        self.hinv[h]
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let v: Vec<i64> = self.k[a].iter().zip(&self.k[b]).map(|(&x, &y)| (x + y) as i64).collect();
        self.encode(&v)
    }

    pub fn neg(&self, a: usize) -> usize {
        let v: Vec<i64> = self.k[a].iter().map(|&x| -(x as i64)).collect();
        self.encode(&v)
    }

    /// `omega_a(k) = exp(2 pi i sum_j a_j k_j / n_j)`.
    pub fn chi(&self, a: usize, k: usize) -> C {
        let t: f64 = (0..self.orders.len()).map(|j| (self.k[a][j] * self.k[k][j]) as f64 / self.orders[j] as f64).sum();
        C::from_polar(1.0, 2.0 * PI * t)
    }

    pub fn root(&self, z: usize) -> C {
        C::from_polar(1.0, 2.0 * PI * z as f64 / self.m as f64)
    }

    /// Index of a root of unity of order `m`.
    pub fn root_index(&self, c: C) -> usize {
        let x = c.arg() / (2.0 * PI) * self.m as f64;
        assert!((x - x.round()).abs() < 1e-6, "not an m-th root of unity");
        (x.round() as i64).rem_euclid(self.m as i64) as usize
    }

    fn compose_search(&self, a: usize, h: usize) -> usize {
        (0..self.n())
            .find(|&b| (0..self.n()).all(|k| (self.chi(b, k) - self.chi(a, self.tau(h, k))).norm() < 1e-9))
            .unwrap()
    }

    /// Label of `omega_a o tau_h`.
    pub fn compose(&self, a: usize, h: usize) -> usize {
        self.dual[h][a]
    }

    /// `omega_h = omega o tau_{h^-1}`.
    pub fn omega_h(&self, a: usize, h: usize) -> usize {
        self.compose(a, self.h_inv(h))
    }

    pub fn mul(&self, g1: &GwhElement, g2: &GwhElement) -> GwhElement {
        let a2h = self.omega_h(g2.a, g1.h);
        let z = self.root(g1.z) * self.root(g2.z) * self.chi(a2h, g1.k);
        GwhElement::new(
            self.h_mul(g1.h, g2.h),
            self.add(g1.k, self.tau(g1.h, g2.k)),
            self.add(g1.a, a2h),
            self.root_index(z),
        )
    }

    /// `theta_{(h,k)}(omega, z) = (omega_h, omega_h(k) z)`.
    pub fn theta(&self, h: usize, k: usize, a: usize, t: usize) -> (usize, usize) {
        let ah = self.omega_h(a, h);
        (ah, self.root_index(self.chi(ah, k) * self.root(t)))
    }

    /// `(pi(g) f)(xi) = z xi(k) conj(omega(k)) f((xi conj omega) o tau_h)`.
    pub fn pi(&self, g: &GwhElement) -> DMatrix<C> {
        let n = self.n();
        let mut m = DMatrix::zeros(n, n);
        for xi in 0..n {
            let c = self.add(xi, self.neg(g.a));
            m[(xi, self.compose(c, g.h))] = self.root(g.z) * self.chi(xi, g.k) * self.chi(g.a, g.k).conj();
        }
        m
    }

    /// `(pi~(g) f)(k') = z omega(k') f(tau_{h^-1}(k' + k))`.
    pub fn pi_tilde(&self, g: &GwhElement) -> DMatrix<C> {
        let n = self.n();
        let hinv = self.h_inv(g.h);
        let mut m = DMatrix::zeros(n, n);
        for kp in 0..n {
            m[(kp, self.tau(hinv, self.add(kp, g.k)))] = self.root(g.z) * self.chi(g.a, kp);
        }
        m
    }

    /// `(rho(g) f)(xi, t) = f((xi conj omega) o tau_h, t conj(z) conj((xi conj omega)(k)))`.
    pub fn rho(&self, g: &GwhElement) -> DMatrix<C> {
        let (n, mm) = (self.n(), self.m);
        let mut m = DMatrix::zeros(n * mm, n * mm);
        for xi in 0..n {
            let c = self.add(xi, self.neg(g.a));
            let src = self.compose(c, g.h);
            for t in 0..mm {
                let tp = self.root_index(self.root(t) * self.root(g.z).conj() * self.chi(c, g.k).conj());
                m[(xi * mm + t, src * mm + tp)] = C::new(1.0, 0.0);
            }
        }
        m
    }

    pub fn rep(&self, name: &str, g: &GwhElement) -> DMatrix<C> {
        match name {
            "pi" => self.pi(g),
            "pitilde" => self.pi_tilde(g),
            "rho" => self.rho(g),
            _ => unreachable!(),
        }
    }

    pub fn weight(&self, name: &str) -> f64 {
        match name {
            "pi" => 1.0,
            "pitilde" => 1.0 / self.n() as f64,
            _ => 1.0 / self.m as f64,
        }
    }

    pub fn point_weight(&self) -> f64 {
        self.mass / self.h_order() as f64 / self.n() as f64 / self.m as f64
    }

    pub fn elements(&self) -> Vec<GwhElement> {
        let (n, m) = (self.n(), self.m);
        let mut out = vec![];
        for h in 0..self.h_order() {
            for k in 0..n {
                for a in 0..n {
                    for z in 0..m {
                        out.push(GwhElement::new(h, k, a, z));
                    }
                }
            }
        }
        out
    }

    pub fn inner(&self, w: f64, f: &[C], g: &[C]) -> C {
        f.iter().zip(g).map(|(x, y)| x * y.conj()).sum::<C>() * w
    }

    /// `sum_g w(g) |<phi, rep(g) psi>|^2`.
    pub fn coefficient_energy(&self, name: &str, phi: &[C], psi: &[C]) -> f64 {
        let w = self.weight(name);
        let v = nalgebra::DVector::from_column_slice(psi);
        self.elements()
            .iter()
            .map(|g| {
                let moved = self.rep(name, g) * &v;
                self.inner(w, phi, moved.as_slice()).norm_sqr()
            })
            .sum::<f64>()
            * self.point_weight()
    }

    /// `f^(k', n') = (1/m) sum_{xi, t} f(xi, t) conj(xi(k')) conj(t^n')`.
    pub fn fourier_quasi(&self, f: &[C]) -> Vec<C> {
        let (n, m) = (self.n(), self.m);
        let mut out = vec![];
        for kp in 0..n {
            for np in 0..m {
                let mut s = C::new(0.0, 0.0);
                for xi in 0..n {
                    for t in 0..m {
                        s += f[xi * m + t] * self.chi(xi, kp).conj() * self.root(t * np).conj();
                    }
                }
                out.push(s / m as f64);
            }
        }
        out
    }

    /// `f^(omega) = (1/|K|) sum_k f(k) conj(omega(k))`.
    pub fn fourier_k(&self, f: &[C]) -> Vec<C> {
        let n = self.n();
        (0..n).map(|a| (0..n).map(|k| f[k] * self.chi(a, k).conj()).sum::<C>() / n as f64).collect()
    }

    /// `psi o theta_{(h,k)^-1}`.
    pub fn transport(&self, psi: &[C], h: usize, k: usize) -> Vec<C> {
        let hinv = self.h_inv(h);
        let kinv = self.tau(hinv, self.neg(k));
        let (n, m) = (self.n(), self.m);
        let mut out = vec![];
        for xi in 0..n {
            for t in 0..m {
                let (a, z) = self.theta(hinv, kinv, xi, t);
                out.push(psi[a * m + z]);
            }
        }
        out
    }

    /// `C(k', n') = sum_{h,k} w_H w_K |(psi o theta_{(h,k)^-1})^(k', n')|^2`.
    pub fn calderon(&self, psi: &[C]) -> Vec<f64> {
        let mut c = vec![0.0; self.n() * self.m];
        let w = self.mass / self.h_order() as f64 / self.n() as f64;
        for h in 0..self.h_order() {
            for k in 0..self.n() {
                for (acc, v) in c.iter_mut().zip(self.fourier_quasi(&self.transport(psi, h, k))) {
                    *acc += w * v.norm_sqr();
                }
            }
        }
        c
    }
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    (0..r).map(|i| (0..r).map(|j| (0..r).map(|l| a[i][l] * b[l][j]).sum()).collect()).collect()
}

pub fn max_entry_diff(a: &DMatrix<C>, b: &DMatrix<C>) -> f64 {
    (a - b).iter().map(|v| v.norm()).fold(0.0, f64::max)
}
