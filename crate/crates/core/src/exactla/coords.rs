use super::{LinAlgError, Mat, Vector};
use crate::scalars::Scalar;

/// Coordinates with respect to a fixed linearly independent family, computed
/// from a square subsystem on a set of pivot coordinates.
#[derive(Debug, Clone)]
pub struct SpanCoords {
    vectors: Vec<Vector>,
    rows: Vec<usize>,
    inv: Mat,
}

impl SpanCoords {
    pub fn new(vectors: Vec<Vector>) -> Result<Self, LinAlgError> {
        let n = vectors.first().map_or(0, Vec::len);
        let m = Mat::from_cols(&vectors, n)?;
        let rows = m.transpose().independent_columns();
        if rows.len() != vectors.len() {
            return Err(LinAlgError::Shape("spanning family is linearly dependent".into()));
        }
        let sub = Mat::from_rows(rows.iter().map(|&r| m.row(r).to_vec()).collect())?;
        let inv = sub.inverse().ok_or_else(|| LinAlgError::Shape("singular pivot block".into()))?;
        Ok(SpanCoords { vectors, rows, inv })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Coordinates of `v`, or `None` if it lies outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let picked: Vector = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inv.mul_vec(&picked).ok()?;
        let mut back = super::zero_vec(v.len());
        for (ci, b) in c.iter().zip(&self.vectors) {
            super::add_scaled(&mut back, ci, b);
        }
        (back.as_slice() == v).then_some(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_and_membership() {
        let v = |xs: &[i64]| xs.iter().map(|&x| Scalar::from_int(x)).collect::<Vector>();
        let sc = SpanCoords::new(vec![v(&[1, 0, 1]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(sc.coords(&v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert_eq!(sc.coords(&v(&[1, 0, 0])), None);
        assert!(SpanCoords::new(vec![v(&[1, 1]), v(&[2, 2])]).is_err());
    }
}
