use super::{FlagError, FqMatrix, FqSubspace, PrimeField};
use crate::combinatorics::Partition;

/// Block-diagonal nilpotent with Jordan blocks of sizes `lambda`, largest
/// block first, ones on each block's superdiagonal.
pub fn jordan_matrix(lambda: &Partition, field: PrimeField) -> FqMatrix {
    let d = lambda.size();
    let mut a = FqMatrix::zeros(field, d, d);
    let mut start = 0;
    for &block in lambda.parts() {
        for i in start..start + block - 1 {
            a.set(i, i + 1, 1);
        }
        start += block;
    }
    a
}

/// First coordinate of each Jordan block of [`jordan_matrix`]; these span
/// its kernel, in order of decreasing block size.
pub fn block_starts(lambda: &Partition) -> Vec<usize> {
    lambda
        .parts()
        .iter()
        .scan(0, |start, &b| {
            let s = *start;
            *start += b;
            Some(s)
        })
        .collect()
}

/// Jordan type of a nilpotent matrix, read off the kernel dimensions of its
/// powers: the conjugate partition has parts `dim ker a^i - dim ker a^{i-1}`.
pub fn jordan_type(a: &FqMatrix) -> Result<Partition, FlagError> {
    let d = a.rows();
    if a.cols() != d {
        return Err(FlagError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let mut conj = Vec::new();
    let mut power = FqMatrix::identity(a.field(), d);
    let mut prev_kernel = 0;
    for _ in 0..d {
        power = power.mul(a);
        let kernel = d - power.rank();
        if kernel == prev_kernel {
            break;
        }
        conj.push(kernel - prev_kernel);
        prev_kernel = kernel;
    }
    if prev_kernel != d {
        return Err(FlagError::NotNilpotent);
    }
    Ok(Partition::new(conj)
        .expect("kernel increments of a nilpotent are weakly decreasing")
        .conjugate())
}

/// Matrix of the map induced by `a` on `F^d / v`, in the basis of standard
/// vectors at the non-pivot coordinates of `v`. Requires `a v ⊆ v`.
pub fn quotient_map(a: &FqMatrix, v: &FqSubspace) -> Result<FqMatrix, FlagError> {
    if !v.maps_into(a, v) {
        return Err(FlagError::NotInvariant);
    }
    let d = a.rows();
    let keep: Vec<usize> = (0..d).filter(|c| !v.pivots().contains(c)).collect();
    let mut out = FqMatrix::zeros(a.field(), keep.len(), keep.len());
    for (col, &j) in keep.iter().enumerate() {
        let mut e = vec![0u32; d];
        e[j] = 1;
        let image = v.reduce(&a.apply(&e));
        for (row, &i) in keep.iter().enumerate() {
            out.set(row, col, image[i]);
        }
    }
    Ok(out)
}

/// Jordan type of the map induced by `a` on the quotient by a subspace `v`
/// of its kernel.
pub fn quotient_type(a: &FqMatrix, v: &FqSubspace) -> Result<Partition, FlagError> {
    if !v
        .basis_vectors()
        .all(|x| a.apply(x).iter().all(|&c| c == 0))
    {
        return Err(FlagError::NotInKernel);
    }
    jordan_type(&quotient_map(a, v)?)
}
