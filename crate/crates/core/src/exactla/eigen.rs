use super::{LinAlgError, Mat, Vector};
use crate::scalars::{CycNumber, Scalar};

/// A joint eigenspace: one eigenvalue per input matrix and a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBlock {
    pub eigenvalues: Vec<CycNumber>,
    pub basis: Vec<Vector>,
}

impl EigenBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Decomposes the space into common eigenspaces of pairwise commuting
/// matrices, each diagonalizable with eigenvalues among `candidates`.
/// Empty blocks are omitted; blocks are listed in lexicographic order of the
/// candidate indices.
pub fn joint_eigenspaces(mats: &[Mat], candidates: &[CycNumber]) -> Result<Vec<EigenBlock>, LinAlgError> {
    let n = match mats.first() {
        Some(m) => m.rows(),
        None => return Err(LinAlgError::Shape("no matrices".into())),
    };
    if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(LinAlgError::Shape("matrices must be square of equal size".into()));
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !mats[i].commutator(&mats[j])?.is_zero() {
                return Err(LinAlgError::NonCommuting(i, j));
            }
        }
    }
    for (k, m) in mats.iter().enumerate() {
        let covered: usize = candidates.iter().map(|l| eigenspace(m, l).len()).sum();
        if covered != n {
            return Err(LinAlgError::InsufficientEigenvalues { matrix: k, covered, dim: n });
        }
    }
    let mut blocks = vec![EigenBlock { eigenvalues: Vec::new(), basis: Mat::identity(n).col_vectors() }];
    for (k, m) in mats.iter().enumerate() {
        let mut next = Vec::new();
        for b in blocks {
            let basis = Mat::from_cols(&b.basis, n)?;
            let image = m.mul(&basis)?;
            let restricted = basis
                .solve_matrix(&image)?
                .ok_or_else(|| LinAlgError::Shape("block is not invariant".into()))?;
            let mut covered = 0;
            for l in candidates {
                let sub = eigenspace(&restricted, l);
                if sub.is_empty() {
                    continue;
                }
                covered += sub.len();
                let mut eigenvalues = b.eigenvalues.clone();
                eigenvalues.push(l.clone());
                let vecs = sub.iter().map(|c| basis.mul_vec(c)).collect::<Result<_, _>>()?;
                next.push(EigenBlock { eigenvalues, basis: vecs });
            }
            if covered != b.basis.len() {
                return Err(LinAlgError::InsufficientEigenvalues { matrix: k, covered, dim: b.basis.len() });
            }
        }
        blocks = next;
    }
    Ok(blocks)
}

fn eigenspace(m: &Mat, l: &CycNumber) -> Vec<Vector> {
    let shifted = m.sub(&Mat::scalar(m.rows(), &Scalar::from_cyc(l.clone()))).expect("square");
    shifted.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::root_of_unity;

    #[test]
    fn identity_is_one_block() {
        let b = joint_eigenspaces(&[Mat::identity(3)], &[CycNumber::one()]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].dim(), 3);
    }

    #[test]
    fn two_diagonal_sign_matrices() {
        let a = Mat::from_ints(&[&[1, 0], &[0, -1]]);
        let b = Mat::from_ints(&[&[-1, 0], &[0, 1]]);
        let c = [CycNumber::one(), CycNumber::from_int(-1)];
        let blocks = joint_eigenspaces(&[a, b], &c).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.dim() == 1));
    }

    #[test]
    fn errors() {
        let a = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        let b = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        assert!(matches!(
            joint_eigenspaces(&[a.clone(), b], &[CycNumber::zero()]),
            Err(LinAlgError::NonCommuting(0, 1))
        ));
        assert!(matches!(
            joint_eigenspaces(&[a], &[CycNumber::zero()]),
            Err(LinAlgError::InsufficientEigenvalues { covered: 1, dim: 2, .. })
        ));
        let rot = Mat::from_ints(&[&[0, -1], &[1, 0]]);
        assert!(joint_eigenspaces(std::slice::from_ref(&rot), &[CycNumber::one()]).is_err());
        let i = root_of_unity(4).unwrap();
        let blocks = joint_eigenspaces(&[rot], &[i.clone(), -&i]).unwrap();
        assert_eq!(blocks.len(), 2);
    }
}
