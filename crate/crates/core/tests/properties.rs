use proptest::prelude::*;

use acd4::constructions::{fold, unfold};
use acd4::format::{parse_code_file, write_code_file};
use acd4::paperdata;
use acd4::search::scaling_for_trial;
use acd4::{AdditiveCode, BinaryCode, BitVec, CodeFile, F2Matrix, F4Vector, Form, Gf4};

fn arb_code(max_n: usize) -> impl Strategy<Value = AdditiveCode> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0u8..4, n), 0..=2 * n).prop_map(move |rows| {
            let rows: Vec<F4Vector> = rows
                .iter()
                .map(|r| F4Vector::from_elements(&r.iter().map(|&x| Gf4::from_code(x)).collect::<Vec<_>>()))
                .collect();
            AdditiveCode::from_generator(n, &rows).unwrap()
        })
    })
}

fn arb_binary(max_n: usize) -> impl Strategy<Value = BinaryCode> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0u8..2, 2 * n), 0..=2 * n).prop_map(move |rows| {
            BinaryCode::from_rows(2 * n, rows.iter().map(|r| BitVec::from_bits(r)).collect()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn acd_iff_code_and_dual_span_everything(c in arb_code(7)) {
        for form in Form::BOTH {
            let dual = c.dual(form);
            prop_assert_eq!(c.k() + dual.k(), 2 * c.n());
            let stacked = c.generator().binary_expansion().vstack(&dual.generator().binary_expansion()).unwrap();
            prop_assert_eq!(c.is_acd(form), stacked.rank() == 2 * c.n());
        }
    }

    #[test]
    fn odd_dimension_is_never_trace_hermitian_acd(c in arb_code(7)) {
        if c.k() % 2 == 1 {
            prop_assert!(!c.is_acd(Form::TraceHermitian));
        }
        let g = c.gram(Form::TraceHermitian);
        prop_assert!(g.is_symmetric() && g.has_zero_diagonal());
    }

    #[test]
    fn gram_routes_agree(c in arb_code(6)) {
        for form in Form::BOTH {
            prop_assert_eq!(c.gram(form), c.gram_from_matrix_products(form));
        }
    }

    #[test]
    fn fold_unfold_round_trip(b in arb_binary(7)) {
        let f = fold(&b).unwrap();
        prop_assert!(unfold(&f).equals(&b));
        prop_assert_eq!(f.is_acd(Form::TraceEuclidean), b.is_lcd());
        let g = b.generator();
        let n = b.n() / 2;
        let halves = |lo: usize, hi: usize| {
            F2Matrix::from_rows(n, g.rows().iter().map(|r| r.slice(lo, hi)).collect()).unwrap()
        };
        let (a, bb) = (halves(0, n), halves(n, 2 * n));
        let sum = a.mul(&a.transpose()).unwrap().add(&bb.mul(&bb.transpose()).unwrap()).unwrap();
        prop_assert_eq!(f.gram(Form::TraceEuclidean), sum);
    }

    #[test]
    fn column_scaling_keeps_weights(c in arb_code(6), trial in 0u64..729) {
        let scales = scaling_for_trial(c.n(), 0, trial);
        let s = c.scale_columns(&scales).unwrap();
        prop_assert_eq!(s.k(), c.k());
        prop_assert_eq!(s.weight_distribution().unwrap(), c.weight_distribution().unwrap());
        // trace-Hermitian products see only s·s̄ = 1
        prop_assert_eq!(s.gram(Form::TraceHermitian), c.gram(Form::TraceHermitian));
    }

    #[test]
    fn permutation_keeps_acd_status(c in arb_code(6), seed in any::<u64>()) {
        let n = c.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let p = c.permute(&perm);
        for form in Form::BOTH {
            prop_assert_eq!(p.is_acd(form), c.is_acd(form));
        }
        prop_assert_eq!(p.weight_distribution().unwrap(), c.weight_distribution().unwrap());
    }
}

#[test]
fn reference_files_round_trip() {
    for id in paperdata::IDS {
        let code = paperdata::load(id).unwrap();
        let back = parse_code_file(&write_code_file(&code)).unwrap();
        let same = match (&code, &back) {
            (CodeFile::Binary(a), CodeFile::Binary(b)) => a.equals(b),
            (CodeFile::Linear(a), CodeFile::Linear(b)) => a.generator() == b.generator(),
            (CodeFile::Additive(a), CodeFile::Additive(b)) => a.equals(b),
            _ => false,
        };
        assert!(same, "{id}");
    }
}
