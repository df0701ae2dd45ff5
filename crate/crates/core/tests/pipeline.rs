use std::path::PathBuf;

use charsheaf::exactfield::{parse_poly, rf};
use charsheaf::lusztigcore::{
    build_omega, factorization_residual, load_case, run_case, solve_block_factorization, CaseBundle, LusztigResult,
};
use charsheaf::{MatrixRF, Poly, QuadRational, RatFunc};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn case(name: &str) -> CaseBundle {
    load_case(&data_dir().join(format!("{name}.json"))).unwrap()
}

fn run(name: &str) -> LusztigResult {
    run_case(&case(name)).unwrap()
}

fn p(src: &str, d: u32) -> Poly {
    parse_poly(src, d).unwrap()
}

fn mismatch_cells(r: &LusztigResult) -> Vec<(String, String)> {
    r.verdict.mismatches.iter().map(|m| (m.row_label.clone(), m.col_label.clone())).collect()
}

#[test]
fn b2_everything_matches() {
    let r = run("b2");
    assert!(r.passes(), "{:?}", r.failures());
    assert_eq!(r.verdict.compared, 12);
    for check in [&r.omega_check, &r.p_check, &r.lambda_check] {
        let v = check.as_ref().unwrap();
        assert!(v.passes());
        assert_eq!(v.compared, 9);
    }
    let lambda: Vec<String> = (0..3).map(|i| r.lambda.get(i, i).to_string()).collect();
    assert_eq!(lambda, ["1", "q^6-q^4+q^2-1", "q^8-q^6+q^4-q^2"]);
}

#[test]
fn g2_factorization_matches_stated_p_and_lambda() {
    let r = run("g2");
    assert!(r.p_check.as_ref().unwrap().passes());
    assert!(r.lambda_check.as_ref().unwrap().passes());
    let p1 = p("(q^4-1)(q^4-q^2+1)", 3);
    let expected = [p1.clone(), p1.shift(2), p1.shift(4)];
    assert_eq!(*r.lambda.get(0, 0), RatFunc::one(3));
    for (k, e) in expected.iter().enumerate() {
        assert_eq!(*r.lambda.get(k + 1, k + 1), RatFunc::from_poly(e.clone()));
    }
    assert!(r.lambda_is_diagonal());
}

/// Ω at (u4,θ'') by hand: |G|/|W|·Σ size·θ̃''(w)²/(|T_w|·q⁴) = q²(q²−1)(q⁴+1).
#[test]
fn g2_omega_entry_by_hand() {
    let r = run("g2");
    assert_eq!(*r.omega.get(1, 1), RatFunc::from_poly(p("q^2(q^2-1)(q^4+1)", 3)));
    // the stated entry differs from it in one sign only
    let stated = p("q^8-q^6-q^4-q^2", 3);
    let diff = r.omega.get(1, 1).is_polynomial().unwrap().checked_sub(&stated).unwrap();
    assert_eq!(diff, p("2q^4", 3));
}

/// Known transcription conflict: the θ'' row of the G₂ target table is the
/// negative of what the stated P produces, and Ω[1][1] carries a sign typo.
#[test]
fn g2_known_disagreements_are_exactly_these() {
    let r = run("g2");
    assert_eq!(r.verdict.compared, 28);
    assert_eq!(
        mismatch_cells(&r),
        [("R_θ̃''".to_string(), "u1".to_string()), ("R_θ̃''".to_string(), "u4".to_string())]
    );
    let omega = r.omega_check.as_ref().unwrap();
    assert_eq!(omega.mismatches.len(), 1);
    assert_eq!((omega.mismatches[0].row, omega.mismatches[0].col), (1, 1));
    assert_eq!(r.failures(), ["target table", "expected omega"]);
    assert!(r.residual_zero && r.orthogonality.passes());
}

/// Negating the θ'' extension on both sides flips the X row but moves the
/// mismatch into P: no choice of scalar matches every stated G₂ matrix.
#[test]
fn g2_sign_flip_trades_table_match_for_p_mismatch() {
    let mut b = case("g2");
    let row = 1;
    b.coset_chars.values[row] = b.coset_chars.values[row].iter().map(|v| -v).collect();
    let choice = b.choices.iter_mut().find(|c| c.class_label == "u4").unwrap();
    choice.values = choice.values.iter().map(|v| -v).collect();
    let r = run_case(&b).unwrap();
    assert!(r.verdict.passes());
    let pcheck = r.p_check.as_ref().unwrap();
    assert!(!pcheck.passes());
    assert!(pcheck.mismatches.iter().all(|m| m.row == row || m.col == row));
}

#[test]
fn f4_table_and_lambda() {
    let r = run("f4");
    assert!(r.passes(), "{:?}", r.failures());
    assert_eq!((r.x.rows(), r.x.cols()), (11, 19));
    assert_eq!(r.verdict.compared, 209);
    assert!(r.lambda_is_diagonal());
    let d = 2;
    let f1 = p("(q^2-1)(q^2+1)^2(q^4+1)(q^4-q^2+1)(q^8-q^4+1)", d);
    let f2 = p("(q^4-1)(q^4+1)^2(q^4-q^2+1)(q^8-q^4+1)", d);
    let f3 = p("(q^2-1)^2(q^2+1)^2(q^4+1)^2(q^4-q^2+1)(q^8-q^4+1)", d);
    let expected = [
        Poly::one(d),
        f1.clone(),
        f2.shift(4),
        f1.shift(10),
        f3.shift(8),
        f3.shift(10),
        f3.shift(12),
        f3.shift(12),
        f3.shift(16),
        f3.shift(18),
        f3.shift(20),
    ];
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(*r.lambda.get(i, i), RatFunc::from_poly(e.clone()), "Lambda[{i}][{i}]");
    }
}

/// The three stated P cells that cannot be read literally are skipped, and the
/// computed values still satisfy the factorization.
#[test]
fn f4_defective_p_cells() {
    let r = run("f4");
    let pcheck = r.p_check.as_ref().unwrap();
    assert!(pcheck.passes());
    assert_eq!(pcheck.skipped, [(0, 1), (0, 9), (1, 8)]);
    assert_eq!(pcheck.compared, 118);
    assert_eq!(r.defects.len(), 3);
    assert!(r.residual_zero);
    // the misprinted factor q^4-q^+1 reads as q^4-q^2+1
    let p1 = RatFunc::from_poly(p("(q^2-1)(q^2+1)^2(q^4-q^2+1)", 2));
    assert_eq!(*r.p.get(0, 1), p1);
    assert_eq!(*r.p.get(0, 9), p1);
    assert_eq!(*r.p.get(1, 8), rf("-q^6+q^2-1", 2).unwrap());
}

#[test]
fn residuals_vanish() {
    for name in ["b2", "g2", "f4"] {
        let r = run(name);
        assert!(factorization_residual(&r.p, &r.lambda, &r.omega).unwrap().is_zero(), "{name}");
        assert!(r.omega_surd_free, "{name}");
        assert!(r.non_polynomial.is_empty(), "{name}");
    }
}

#[test]
fn trivial_and_sign_rows() {
    for (name, n) in [("b2", 4), ("g2", 6), ("f4", 24)] {
        let r = run(name);
        let d = r.d;
        let last = r.x.rows() - 1;
        assert!(r.x.row(last).iter().all(|c| *c == RatFunc::one(d)), "{name} trivial row");
        let sign = r.x.row(0);
        assert_eq!(sign[0], RatFunc::from_poly(Poly::one(d).shift(n)), "{name} sign row");
        assert!(sign[1..].iter().all(RatFunc::is_zero), "{name} sign row");
    }
}

/// Reverses each Springer block; the unique solution must permute along.
/// Only F₄ has a class carrying two pairs (x17).
#[test]
fn solver_is_equivariant_under_block_internal_permutations() {
    for name in ["f4"] {
        let b = case(name);
        let omega = build_omega(&b).unwrap();
        let ids = b.block_ids();
        let (p0, l0) = solve_block_factorization(&omega, &ids).unwrap();
        let mut perm: Vec<usize> = (0..ids.len()).collect();
        let mut start = 0;
        while start < ids.len() {
            let end = (start..ids.len()).find(|&k| ids[k] != ids[start]).unwrap_or(ids.len());
            perm[start..end].reverse();
            start = end;
        }
        assert_ne!(perm, (0..ids.len()).collect::<Vec<_>>(), "{name} has a block of size > 1");
        let (p1, l1) = solve_block_factorization(&omega.permute_symmetric(&perm), &ids).unwrap();
        assert_eq!(p1, p0.permute_symmetric(&perm), "{name} P");
        assert_eq!(l1, l0.permute_symmetric(&perm), "{name} Lambda");
    }
}

/// Scaling one extension by −1 on both sides negates that pair's X row only.
#[test]
fn scalar_covariance_of_extensions() {
    let base = run("b2");
    let mut b = case("b2");
    let row = 1;
    b.coset_chars.values[row] = b.coset_chars.values[row].iter().map(|v| -v).collect();
    let class = b.springer[row].class_label.clone();
    let choice = b.choices.iter_mut().find(|c| c.class_label == class).unwrap();
    choice.values = choice.values.iter().map(|v| -v).collect();
    let r = run_case(&b).unwrap();
    for i in 0..r.x.rows() {
        for j in 0..r.x.cols() {
            let expected = if i == row { -base.x.get(i, j) } else { base.x.get(i, j).clone() };
            assert_eq!(*r.x.get(i, j), expected, "X[{i}][{j}]");
        }
    }
    assert_eq!(*r.omega.get(0, row), -base.omega.get(0, row));
    assert_eq!(*r.lambda.get(row, row), *base.lambda.get(row, row));
}

#[test]
fn y_tables() {
    let b2 = run("b2");
    let rows: Vec<Vec<String>> =
        (0..3).map(|i| b2.y.row(i).iter().map(ToString::to_string).collect()).collect();
    assert_eq!(rows, [["1", "0", "0", "0"], ["0", "-1", "0", "0"], ["0", "0", "1", "1"]]);
    // each row is supported on, and nonzero somewhere in, the columns of its own class
    for name in ["g2", "f4"] {
        let r = run(name);
        let b = case(name);
        for (i, pair) in b.springer.iter().enumerate() {
            let own = b.layout.columns_of(&pair.class_label);
            for c in 0..r.y.cols() {
                assert!(r.y.get(i, c).is_zero() || own.contains(&c), "{name} Y[{i}][{c}]");
            }
            assert!(own.iter().any(|&c| !r.y.get(i, c).is_zero()), "{name} Y row {i}");
        }
    }
}

// Numeric oracle: evaluate every input at a rational point and redo the
// whole computation with field elements only.

type Num = Vec<Vec<QuadRational>>;

fn at(r: &RatFunc, t: &QuadRational) -> QuadRational {
    r.numer().eval(t).unwrap().checked_div(&r.denom().eval(t).unwrap()).unwrap()
}

fn num_mul(a: &Num, b: &Num, d: u32) -> Num {
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| (0..b.len()).fold(QuadRational::zero(d), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

fn num_inverse(m: &Num, d: u32) -> Num {
    let n = m.len();
    let mut a: Num = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { QuadRational::one(d) } else { QuadRational::zero(d) }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, pivot);
        let inv = a[col][col].inv().unwrap();
        a[col] = a[col].iter().map(|x| x * &inv).collect();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn sub(m: &Num, rows: &[usize], cols: &[usize]) -> Num {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

fn transpose(m: &Num) -> Num {
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Scalar block elimination at a point, written independently of the library solver.
fn numeric_factor(omega: &Num, ids: &[usize], d: u32) -> (Num, Num) {
    let n = omega.len();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match blocks.last_mut() {
            Some(b) if ids[b[0]] == ids[i] => b.push(i),
            _ => blocks.push(vec![i]),
        }
    }
    let mut p: Num = (0..n)
        .map(|i| (0..n).map(|j| if i == j { QuadRational::one(d) } else { QuadRational::zero(d) }).collect())
        .collect();
    let mut lambda: Num = vec![vec![QuadRational::zero(d); n]; n];
    for (bi, ib) in blocks.iter().enumerate() {
        let reduced = |jb: &[usize]| -> Num {
            let mut m = sub(omega, ib, jb);
            for kb in &blocks[..bi] {
                let t = num_mul(&num_mul(&transpose(&sub(&p, kb, ib)), &sub(&lambda, kb, kb), d), &sub(&p, kb, jb), d);
                for (r, tr) in m.iter_mut().zip(&t) {
                    for (x, y) in r.iter_mut().zip(tr) {
                        *x = &*x - y;
                    }
                }
            }
            m
        };
        let lam = reduced(ib);
        let lam_inv = num_inverse(&lam, d);
        let mut placements = Vec::new();
        for jb in &blocks[bi + 1..] {
            placements.push((jb.clone(), num_mul(&lam_inv, &reduced(jb), d)));
        }
        for (a, &i) in ib.iter().enumerate() {
            for (b, &j) in ib.iter().enumerate() {
                lambda[i][j] = lam[a][b].clone();
            }
        }
        for (jb, block) in placements {
            for (a, &i) in ib.iter().enumerate() {
                for (b, &j) in jb.iter().enumerate() {
                    p[i][j] = block[a][b].clone();
                }
            }
        }
    }
    (p, lambda)
}

fn numeric_oracle(name: &str, t: QuadRational) {
    let b = case(name);
    let r = run_case(&b).unwrap();
    let d = b.d;
    let n = b.springer.len();
    let du = b.d_values();
    let sizes = b.weyl.sizes();
    let g = b.group_order.eval(&t).unwrap();
    let w = QuadRational::from_integer(b.weyl.order() as i64, d);
    let torus: Vec<QuadRational> = b.coset_chars.column_torus_orders.iter().map(|x| x.eval(&t).unwrap()).collect();
    let mut omega: Num = vec![vec![QuadRational::zero(d); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = QuadRational::zero(d);
            for c in 0..sizes.len() {
                let term = &(&b.coset_chars.values[i][c] * &b.coset_chars.values[j][c])
                    * &QuadRational::from_integer(sizes[c] as i64, d);
                acc = &acc + &term.checked_div(&torus[c]).unwrap();
            }
            let scale = (&w * &t.pow(du[i] + du[j])).inv().unwrap();
            omega[i][j] = &(&acc * &g) * &scale;
            assert_eq!(omega[i][j], at(r.omega.get(i, j), &t), "{name} Omega[{i}][{j}] at {t}");
        }
    }
    let (p, lambda) = numeric_factor(&omega, &b.block_ids(), d);
    for i in 0..n {
        for j in 0..n {
            assert_eq!(p[i][j], at(r.p.get(i, j), &t), "{name} P[{i}][{j}] at {t}");
            assert_eq!(lambda[i][j], at(r.lambda.get(i, j), &t), "{name} Lambda[{i}][{j}] at {t}");
        }
    }
    for u in 0..n {
        for c in 0..r.x.cols() {
            let s = (0..n).fold(QuadRational::zero(d), |acc, v| &acc + &(&p[v][u] * &at(r.y.get(v, c), &t)));
            assert_eq!(&s * &t.pow(du[u]), at(r.x.get(u, c), &t), "{name} X[{u}][{c}] at {t}");
        }
    }
}

#[test]
fn numeric_oracle_b2() {
    numeric_oracle("b2", QuadRational::from_integer(3, 2));
    numeric_oracle("b2", QuadRational::from_fraction(7, 3, 2));
}

#[test]
fn numeric_oracle_g2() {
    numeric_oracle("g2", QuadRational::from_integer(5, 3));
    numeric_oracle("g2", QuadRational::from_fraction(-4, 7, 3));
}

#[test]
fn numeric_oracle_f4() {
    numeric_oracle("f4", QuadRational::from_integer(3, 2));
}

#[test]
fn sizes_from_columns_match_brute_force() {
    for name in ["b2", "g2", "f4"] {
        let r = run(name);
        let brute: Vec<usize> = r.columns.iter().map(|c| c.size).collect();
        assert_eq!(r.sizes_from_columns.as_deref(), Some(&brute[..]), "{name}");
        assert!(r.orthogonality.passes(), "{name}");
    }
    assert_eq!(run("f4").columns[0].size, 72);
}

#[test]
fn unfactorizable_omega_is_reported() {
    let omega = MatrixRF::from_poly_rows(vec![vec![p("1", 2), p("1", 2)], vec![p("1", 2), p("1", 2)]], 2).unwrap();
    assert!(solve_block_factorization(&omega, &[0, 1]).is_err());
}
