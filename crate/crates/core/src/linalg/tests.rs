use super::*;
use proptest::prelude::*;

fn f7() -> Field {
    Field::prime(7).unwrap()
}

fn v(f: &Field, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| f.from_int(x)).collect()
}

#[test]
fn inverse_roundtrip() {
    let f = f7();
    let m = Matrix::from_rows(&[v(&f, &[1, 2]), v(&f, &[3, 4])]).unwrap();
    let inv = m.inverse(&f).unwrap();
    assert_eq!(m.mul(&f, &inv).unwrap(), Matrix::identity(2));
    let singular = Matrix::from_rows(&[v(&f, &[1, 2]), v(&f, &[2, 4])]).unwrap();
    assert!(singular.inverse(&f).is_none());
}

#[test]
fn kernel_and_preimage() {
    let f = f7();
    // projection onto the first coordinate of k^3
    let m = Matrix::from_rows(&[v(&f, &[1, 0, 0])]).unwrap();
    assert_eq!(kernel(&f, &m).dim(), 2);
    // preimage of the zero subspace is the kernel; of everything is everything
    assert_eq!(preimage_subspace(&f, &m, &Subspace::zero(1)).unwrap(), kernel(&f, &m));
    assert_eq!(preimage_subspace(&f, &m, &Subspace::full(1)).unwrap().dim(), 3);
    // the x-axis of k^2 pulled back along the swap map is the y-axis
    let swap = Matrix::from_rows(&[v(&f, &[0, 1]), v(&f, &[1, 0])]).unwrap();
    let x_axis = Subspace::span(&f, 2, &[v(&f, &[1, 0])]);
    let y_axis = Subspace::span(&f, 2, &[v(&f, &[0, 1])]);
    assert_eq!(preimage_subspace(&f, &swap, &x_axis).unwrap(), y_axis);
    assert!(preimage_subspace(&f, &swap, &Subspace::zero(3)).is_err());
}

#[test]
fn subspace_ops() {
    let f = f7();
    let a = Subspace::span(&f, 3, &[v(&f, &[1, 1, 0]), v(&f, &[0, 1, 1])]);
    let b = Subspace::span(&f, 3, &[v(&f, &[1, 0, 0]), v(&f, &[0, 0, 1])]);
    let i = a.intersect(&f, &b);
    assert_eq!(i.dim(), 1);
    assert!(i.contains(&f, &v(&f, &[1, 0, -1])));
    assert_eq!(a.sum(&f, &b).dim(), 3);
    let c = a.coords(&f, &v(&f, &[2, 5, 3])).unwrap();
    let rebuilt = c.iter().zip(a.basis()).fold(zero_vec(3), |mut acc, (&s, b)| {
        axpy(&f, &mut acc, s, b);
        acc
    });
    assert_eq!(rebuilt, v(&f, &[2, 5, 3]));
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0i64..7, rows * cols)
}

proptest! {
    #[test]
    fn rank_nullity(data in arb_matrix(3, 5)) {
        let f = f7();
        let m = Matrix { rows: 3, cols: 5, data: data.iter().map(|&x| f.from_int(x)).collect() };
        let k = kernel(&f, &m);
        prop_assert_eq!(m.rank(&f) + k.dim(), 5);
        for b in k.basis() {
            prop_assert!(is_zero_vec(&m.mul_vec(&f, b)));
        }
    }

    #[test]
    fn preimage_is_exact(data in arb_matrix(4, 4), w in arb_matrix(2, 4), x in arb_matrix(1, 4)) {
        let f = f7();
        let m = Matrix { rows: 4, cols: 4, data: data.iter().map(|&x| f.from_int(x)).collect() };
        let ws: Vec<Vector> = w.chunks(4).map(|c| v(&f, c)).collect();
        let sub = Subspace::span(&f, 4, &ws);
        let pre = preimage_subspace(&f, &m, &sub).unwrap();
        let xv = v(&f, &x);
        prop_assert_eq!(pre.contains(&f, &xv), sub.contains(&f, &m.mul_vec(&f, &xv)));
    }
}
