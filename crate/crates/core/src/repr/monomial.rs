use nalgebra::DMatrix;
use num_complex::Complex64;

/// A matrix with exactly one nonzero per row and column:
/// `(M f)[i] = phase[i] * f[source[i]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial {
    pub source: Vec<usize>,
    pub phase: Vec<Complex64>,
}

impl Monomial {
    pub fn identity(n: usize) -> Self {
        Self { source: (0..n).collect(), phase: vec![Complex64::new(1.0, 0.0); n] }
    }

    pub fn dim(&self) -> usize {
        self.source.len()
    }

    pub fn apply(&self, f: &[Complex64]) -> Vec<Complex64> {
        self.source.iter().zip(&self.phase).map(|(&s, p)| p * f[s]).collect()
    }

    /// `self o other`.
    pub fn compose(&self, other: &Monomial) -> Monomial {
        let source = self.source.iter().map(|&s| other.source[s]).collect();
        let phase = self.source.iter().zip(&self.phase).map(|(&s, p)| p * other.phase[s]).collect();
        Monomial { source, phase }
    }

    pub fn adjoint(&self) -> Monomial {
        let n = self.dim();
        let mut source = vec![0; n];
        let mut phase = vec![Complex64::new(0.0, 0.0); n];
        for (i, (&s, p)) in self.source.iter().zip(&self.phase).enumerate() {
            source[s] = i;
            phase[s] = p.conj();
        }
        Monomial { source, phase }
    }

    /// Largest entrywise difference between the two matrices.
    pub fn deviation(&self, other: &Monomial) -> f64 {
        self.source
            .iter()
            .zip(&other.source)
            .zip(self.phase.iter().zip(&other.phase))
            .map(|((s1, s2), (p1, p2))| if s1 == s2 { (p1 - p2).norm() } else { p1.norm().max(p2.norm()) })
            .fold(0.0, f64::max)
    }

    /// Whether `source` is a permutation.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.dim()];
        for &s in &self.source {
            if s >= seen.len() || seen[s] {
                return false;
            }
            seen[s] = true;
        }
        true
    }

    /// Block-diagonal `self (+) other`.
    pub fn direct_sum(&self, other: &Monomial) -> Monomial {
        let n = self.dim();
        let source = self.source.iter().copied().chain(other.source.iter().map(|&s| s + n)).collect();
        let phase = self.phase.iter().chain(&other.phase).copied().collect();
        Monomial { source, phase }
    }

    pub fn to_matrix(&self) -> DMatrix<Complex64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for (i, (&s, p)) in self.source.iter().zip(&self.phase).enumerate() {
            m[(i, s)] = *p;
        }
        m
    }
}
