//! Fixed exact instances of the spectral, rank and determinant laws.
//!
//! These pin concrete numbers computed through independent routes
//! (diagonal read-offs, cofactor determinants, hand expansion); the
//! randomized sweeps live in the verification harness of the CLI crate.

use multilin::alt::{alt_column_entries, alt_column_vector, gl_action_antisym};
use multilin::multiindex::StrictIndex;
use multilin::polymap::gl_action_homogeneous;
use multilin::sym::column_entries;
use multilin::{AltMatrix, DenseMatrix, PolyMap, Rational, SymMatrix};

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn dense(rows: &[&[i64]]) -> DenseMatrix {
    DenseMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect(),
    )
    .unwrap()
}

fn sym11(m: &DenseMatrix) -> SymMatrix {
    SymMatrix::from_dense(m.rows(), m.cols(), 1, 1, m).unwrap()
}

fn alt11(m: &DenseMatrix) -> AltMatrix {
    AltMatrix::from_dense(m.rows(), m.cols(), 1, 1, m).unwrap()
}

#[test]
fn normalized_square_of_diag_2_3_has_determinant_216() {
    let a = dense(&[&[2, 0], &[0, 3]]);
    let powered = sym11(&a).sym_power(2).unwrap().to_dense();
    // Diagonal monomials 4, 6, 9 over the weight-2 stratum.
    assert_eq!(
        powered.triangular_spectrum().unwrap(),
        vec![q(4), q(6), q(9)]
    );
    assert_eq!(powered.det().unwrap(), q(216));
}

#[test]
fn normalized_power_spectrum_of_a_triangular_matrix() {
    let a = dense(&[&[1, 5, -2], &[0, 2, 7], &[0, 0, 3]]);
    let powered = sym11(&a).sym_power(2).unwrap().to_dense();
    assert!(powered.is_upper_triangular());
    // Products of diagonal pairs: 1, 2, 3, 4, 6, 9.
    let mut expected: Vec<Rational> = [1, 2, 3, 4, 6, 9].iter().map(|&v| q(v)).collect();
    expected.sort();
    assert_eq!(powered.triangular_spectrum().unwrap(), expected);
}

#[test]
fn normalized_power_rank_of_a_rank_one_matrix() {
    let a = dense(&[&[1, 2], &[2, 4]]);
    assert_eq!(a.rank(), 1);
    for k in 0..=3 {
        // The power of a rank-1 matrix keeps rank 1.
        assert_eq!(sym11(&a).sym_power(k).unwrap().to_dense().rank(), 1);
    }
}

#[test]
fn normalized_powers_are_functorial() {
    let a = dense(&[&[1, 2], &[0, 1]]);
    let b = dense(&[&[2, 1], &[1, 1]]);
    let ab = a.matmul(&b).unwrap();
    for k in 0..=3 {
        let lhs = sym11(&ab).sym_power(k).unwrap();
        let rhs = sym11(&a)
            .sym_power(k)
            .unwrap()
            .matmul(&sym11(&b).sym_power(k).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "k = {k}");
    }
    // The power of the inverse inverts the power.
    let b_inv = b.inverse().unwrap();
    let product = sym11(&b)
        .sym_power(2)
        .unwrap()
        .matmul(&sym11(&b_inv).sym_power(2).unwrap())
        .unwrap();
    assert_eq!(product.to_dense(), DenseMatrix::identity(3));
}

#[test]
fn second_compound_of_diag_2_3_5_has_determinant_900() {
    let a = dense(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
    let compound = alt11(&a).compound(2).unwrap().to_dense();
    assert_eq!(
        compound.triangular_spectrum().unwrap(),
        vec![q(6), q(10), q(15)]
    );
    assert_eq!(compound.det().unwrap(), q(900));
    assert_eq!(a.det().unwrap().pow(2).unwrap(), q(900));
}

#[test]
fn compound_entries_are_minors() {
    let a = dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
    let compound = alt11(&a).compound(2).unwrap();
    for rows in [[1, 2], [1, 3], [2, 3]] {
        for cols in [[1, 2], [1, 3], [2, 3]] {
            let sub = DenseMatrix::construct(2, 2, |r, c| a.at(rows[r] - 1, cols[c] - 1).clone());
            let row_idx = StrictIndex::new(rows.to_vec(), 3).unwrap();
            let col_idx = StrictIndex::new(cols.to_vec(), 3).unwrap();
            assert_eq!(
                compound.entry(&row_idx, &col_idx).unwrap(),
                &sub.det().unwrap(),
                "minor at {rows:?} x {cols:?}"
            );
        }
    }
}

#[test]
fn compound_acts_on_wedges_of_images() {
    // The wedge of images equals the compound applied to the wedge.
    let a = dense(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
    let x = [q(1), q(0), q(2)];
    let y = [q(3), q(-1), q(1)];
    let lhs = alt_column_vector(&a.matvec(&x).unwrap())
        .wedge(&alt_column_vector(&a.matvec(&y).unwrap()))
        .unwrap();
    let rhs = alt11(&a)
        .compound(2)
        .unwrap()
        .matmul(&alt_column_vector(&x).wedge(&alt_column_vector(&y)).unwrap())
        .unwrap();
    assert_eq!(
        alt_column_entries(&lhs).unwrap(),
        alt_column_entries(&rhs).unwrap()
    );
}

#[test]
fn image_products_factor_through_the_normalized_power() {
    let a = dense(&[&[1, -1], &[2, 0]]);
    let v1 = [q(1), q(3)];
    let v2 = [q(-2), q(1)];
    let av1 = multilin::sym::column_vector(&a.matvec(&v1).unwrap());
    let av2 = multilin::sym::column_vector(&a.matvec(&v2).unwrap());
    let lhs = av1.odot(&av2).unwrap();
    let source = multilin::sym::column_vector(&v1)
        .odot(&multilin::sym::column_vector(&v2))
        .unwrap();
    let rhs = sym11(&a).sym_power(2).unwrap().matmul(&source).unwrap();
    assert_eq!(column_entries(&lhs).unwrap(), column_entries(&rhs).unwrap());
}

#[test]
fn both_actions_fix_identity_changes_and_compose() {
    let block = SymMatrix::from_dense(2, 2, 1, 2, &dense(&[&[1, 2, 3], &[4, 5, 6]])).unwrap();
    let s = dense(&[&[1, 1], &[0, 1]]);
    let t1_inv = dense(&[&[2, 1], &[1, 1]]);
    let t2_inv = dense(&[&[1, 0], &[3, 1]]);
    let id = DenseMatrix::identity(2);
    assert_eq!(gl_action_homogeneous(&block, &id, &id).unwrap(), block);
    let step = gl_action_homogeneous(
        &gl_action_homogeneous(&block, &s, &t1_inv).unwrap(),
        &s,
        &t2_inv,
    )
    .unwrap();
    let joint = gl_action_homogeneous(
        &block,
        &s.matmul(&s).unwrap(),
        &t1_inv.matmul(&t2_inv).unwrap(),
    )
    .unwrap();
    assert_eq!(step, joint);

    let alt_block =
        AltMatrix::from_dense(3, 3, 1, 2, &dense(&[&[1, 0, 2], &[0, 1, 1], &[2, 1, 0]])).unwrap();
    let t = dense(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    assert_eq!(
        gl_action_antisym(&alt_block, &DenseMatrix::identity(3)).unwrap(),
        alt_block
    );
    let round = gl_action_antisym(
        &gl_action_antisym(&alt_block, &t).unwrap(),
        &t.inverse().unwrap(),
    )
    .unwrap();
    assert_eq!(round, alt_block);
}

#[test]
fn composition_is_linear_in_the_block_row() {
    // Composing with a linear inner map multiplies each block by the
    // normalized power of its matrix.
    let outer_block = SymMatrix::from_dense(1, 2, 1, 2, &dense(&[&[2, -1, 3]])).unwrap();
    let outer = PolyMap::from_blocks(
        2,
        1,
        vec![
            SymMatrix::zeros(1, 2, 1, 0),
            SymMatrix::zeros(1, 2, 1, 1),
            outer_block.clone(),
        ],
    )
    .unwrap();
    let t = dense(&[&[1, 2], &[0, 1]]);
    let composed = outer.compose(&PolyMap::linear(&t)).unwrap();
    let expected = outer_block
        .matmul(&sym11(&t).sym_power(2).unwrap())
        .unwrap();
    assert_eq!(composed.block(2), Some(&expected));
}
