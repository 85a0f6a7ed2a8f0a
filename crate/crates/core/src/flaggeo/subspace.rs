use super::{FqMatrix, PrimeField};

/// A subspace of `F_p^N`, stored by its reduced row echelon basis so that
/// equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqSubspace {
    basis: FqMatrix,
    pivots: Vec<usize>,
}

impl FqSubspace {
    /// Row space of `spanning` (rows may be dependent).
    pub fn span(spanning: FqMatrix) -> Self {
        let mut basis = spanning;
        let pivots = basis.rref_in_place();
        basis.truncate_rows(pivots.len());
        FqSubspace { basis, pivots }
    }

    pub fn from_vectors(field: PrimeField, ambient_dim: usize, vectors: &[Vec<u32>]) -> Self {
        let mut m = FqMatrix::zeros(field, vectors.len(), ambient_dim);
        for (i, v) in vectors.iter().enumerate() {
            for (j, &x) in v.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Self::span(m)
    }

    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Self::span(FqMatrix::zeros(field, 0, ambient_dim))
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        Self::span(FqMatrix::identity(field, ambient_dim))
    }

    /// Null space `{v : a v = 0}` of a square or rectangular matrix.
    pub fn kernel(a: &FqMatrix) -> Self {
        let f = a.field();
        let mut r = a.clone();
        let pivots = r.rref_in_place();
        let n = a.cols();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vec<u32>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0u32; n];
                v[fc] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect();
        Self::from_vectors(f, n, &vectors)
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    /// `v` minus its projection along the pivot coordinates; zero exactly
    /// when `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            for (j, &b) in self.basis.row(row).iter().enumerate() {
                out[j] = f.sub(out[j], f.mul(c, b));
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &FqSubspace) -> bool {
        other.dim() <= self.dim() && other.basis_vectors().all(|v| self.contains_vector(v))
    }

    /// Whether `a` maps this subspace into `target`.
    pub fn maps_into(&self, a: &FqMatrix, target: &FqSubspace) -> bool {
        self.basis_vectors()
            .all(|v| target.contains_vector(&a.apply(v)))
    }
}

/// Every `k`-dimensional subspace of `ambient`, each exactly once.
///
/// Subspaces are produced as `C · B`, where `B` is the echelon basis of
/// `ambient` and `C` runs over all `k × dim(ambient)` matrices in reduced row
/// echelon form: first over pivot sets in lexicographic order, then over the
/// free entries as a base-`p` odometer.
pub fn enumerate_subspaces(ambient: &FqSubspace, k: usize) -> SubspaceIter<'_> {
    let m = ambient.dim();
    SubspaceIter {
        ambient,
        k,
        pivots: if k <= m { Some((0..k).collect()) } else { None },
        free: Vec::new(),
        digits: Vec::new(),
        fresh: true,
    }
}

pub struct SubspaceIter<'a> {
    ambient: &'a FqSubspace,
    k: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    fresh: bool,
}

impl SubspaceIter<'_> {
    fn load_free_positions(&mut self) {
        let m = self.ambient.dim();
        let pivots = self.pivots.as_ref().expect("active pivot set");
        self.free = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| {
                ((c + 1)..m)
                    .filter(|j| !pivots.contains(j))
                    .map(move |j| (r, j))
            })
            .collect();
        self.digits = vec![0; self.free.len()];
    }

    fn advance_pivots(&mut self) {
        let m = self.ambient.dim();
        let k = self.k;
        let Some(piv) = self.pivots.as_mut() else {
            return;
        };
        // Next k-combination of 0..m in lexicographic order.
        let mut i = k;
        while i > 0 {
            i -= 1;
            if piv[i] < m - k + i {
                piv[i] += 1;
                for t in i + 1..k {
                    piv[t] = piv[t - 1] + 1;
                }
                return;
            }
        }
        self.pivots = None;
    }

    fn advance_digits(&mut self) -> bool {
        let p = self.ambient.field().characteristic() as u32;
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < p {
                return true;
            }
            *d = 0;
        }
        false
    }

    fn current(&self) -> FqSubspace {
        let amb = self.ambient;
        let f = amb.field();
        let m = amb.dim();
        let pivots = self.pivots.as_ref().expect("active pivot set");
        let mut coeffs = FqMatrix::zeros(f, self.k, m);
        for (r, &c) in pivots.iter().enumerate() {
            coeffs.set(r, c, 1);
        }
        for (&(r, j), &x) in self.free.iter().zip(&self.digits) {
            coeffs.set(r, j, x);
        }
        FqSubspace::span(coeffs.mul(amb.basis()))
    }
}

impl Iterator for SubspaceIter<'_> {
    type Item = FqSubspace;

    fn next(&mut self) -> Option<FqSubspace> {
        self.pivots.as_ref()?;
        if self.fresh {
            self.load_free_positions();
            self.fresh = false;
        } else if !self.advance_digits() {
            self.advance_pivots();
            self.pivots.as_ref()?;
            self.load_free_positions();
        }
        Some(self.current())
    }
}
