use algebroid::field::{Field, Scalar};
use algebroid::linalg::{invert, kernel, rank, solve, Subspace};
use algebroid::mat::Mat;
use proptest::prelude::*;

fn mat_strategy(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    // small entries with plenty of zeros, so rank deficiency is common
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], rows * cols)
        .prop_map(move |v| Mat::from_fn(f, rows, cols, |i, j| f.int(v[i * cols + j])))
}

fn sized(f: Field) -> impl Strategy<Value = Mat> {
    (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| mat_strategy(f, r, c))
}

/// Independent rank: fraction-free elimination on dense rows.
fn dense_rank(f: Field, m: &Mat) -> usize {
    let mut rows: Vec<Vec<Scalar>> = m.to_dense();
    let (nr, nc) = m.shape();
    let mut r = 0;
    for c in 0..nc {
        let Some(p) = (r..nr).find(|&i| rows[i][c] != f.zero()) else { continue };
        rows.swap(r, p);
        for i in 0..nr {
            if i != r && rows[i][c] != f.zero() {
                let (a, b) = (rows[r][c].clone(), rows[i][c].clone());
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = f.sub(&f.mul(&a, x), &f.mul(&b, y));
                }
            }
        }
        r += 1;
    }
    r
}

proptest! {
    #[test]
    fn rank_agrees_with_dense_oracle(a in sized(Field::Rationals)) {
        prop_assert_eq!(rank(&a), dense_rank(Field::Rationals, &a));
    }

    #[test]
    fn rank_agrees_with_dense_oracle_mod_3(a in sized(Field::Prime { p: 3 })) {
        prop_assert_eq!(rank(&a), dense_rank(Field::Prime { p: 3 }, &a));
    }

    #[test]
    fn rank_nullity(a in sized(Field::Rationals)) {
        let k = kernel(&a);
        prop_assert_eq!(rank(&a) + k.ncols(), a.ncols());
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(rank(&k), k.ncols());
    }

    #[test]
    fn solve_reproduces_consistent_right_hand_sides(
        (a, x) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (mat_strategy(Field::Rationals, r, c), mat_strategy(Field::Rationals, c, 2)))
    ) {
        let b = a.mul(&x);
        let s = solve(&a, &b).unwrap();
        prop_assert_eq!(a.mul(&s.particular), b);
        prop_assert_eq!(s.is_unique(), rank(&a) == a.ncols());
    }

    #[test]
    fn inverse_when_full_rank(a in (1usize..5).prop_flat_map(|n| mat_strategy(Field::Rationals, n, n))) {
        match invert(&a) {
            Ok(inv) => {
                prop_assert!(inv.mul(&a).is_identity());
                prop_assert!(a.mul(&inv).is_identity());
            }
            Err(_) => prop_assert!(rank(&a) < a.nrows()),
        }
    }

    #[test]
    fn subspace_coordinates_invert_the_basis(a in sized(Field::Rationals)) {
        let s = Subspace::span(&a);
        prop_assert!(s.coords.mul(&s.basis).is_identity() || s.dim() == 0);
        for j in 0..a.ncols() {
            prop_assert!(s.contains(&a.column(j)));
        }
    }

    #[test]
    fn kron_mixed_product(
        (a, b, c, d) in (1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(m, n, p, q, r, s)| (
            mat_strategy(Field::Rationals, m, n),
            mat_strategy(Field::Rationals, p, q),
            mat_strategy(Field::Rationals, n, r),
            mat_strategy(Field::Rationals, q, s),
        ))
    ) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn vectorization_identities(
        (x, a, b) in (1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(m, n, p, q)| (
            mat_strategy(Field::Rationals, m, n),
            mat_strategy(Field::Rationals, n, p),
            mat_strategy(Field::Rationals, q, m),
        ))
    ) {
        let f = Field::Rationals;
        let (m, n) = x.shape();
        prop_assert_eq!(x.mul(&a).vectorize(), Mat::identity(f, m).kron(&a.transpose()).mul(&x.vectorize()));
        prop_assert_eq!(b.mul(&x).vectorize(), b.kron(&Mat::identity(f, n)).mul(&x.vectorize()));
        prop_assert_eq!(x.vectorize().unvectorize(m, n), x);
    }
}
