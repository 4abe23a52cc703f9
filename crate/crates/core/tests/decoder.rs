use cyclic_stabilizer::construct::Code;
use cyclic_stabilizer::decode::*;
use cyclic_stabilizer::field::{Field, QuadElem};
use cyclic_stabilizer::poly::{Poly, PolyArith};
use cyclic_stabilizer::symplectic::PauliVector;
use cyclic_stabilizer::table1::ROWS;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn row_code(n: usize) -> Code {
    ROWS.iter().find(|r| r.n == n).unwrap().build().unwrap()
}

fn single_errors(code: &Code) -> Vec<PauliVector> {
    let n = code.n();
    let mut out = Vec::new();
    for pos in 0..n {
        for (x, z) in [(1, 0), (1, 1), (0, 1)] {
            let mut xv = vec![0; n];
            let mut zv = vec![0; n];
            xv[pos] = x;
            zv[pos] = z;
            out.push(physical_to_code(code, &xv, &zv));
        }
    }
    out
}

#[test]
fn single_errors_are_recovered_on_n13_and_n17() {
    for n in [13, 17] {
        let code = row_code(n);
        assert_eq!(correction_radius(&code), 1);
        for e in single_errors(&code) {
            let d = decode_error(&code, &e).unwrap();
            assert!(d.success, "n={n} e={e:?}");
            assert_eq!((d.e1, d.e2), (e.a.clone(), e.b.clone()));
        }
    }
}

#[test]
fn two_sparse_error_polynomials_are_recovered_n13() {
    let code = row_code(13);
    let quad = *code.quad();
    let nonzero: Vec<QuadElem> = quad.elements().filter(|x| !quad.is_zero(x)).collect();
    for i in 0..13 {
        for j in i + 1..13 {
            for ci in &nonzero {
                for cj in &nonzero {
                    let mut e = vec![QuadElem::new(0, 0); 13];
                    e[i] = *ci;
                    e[j] = *cj;
                    let r = quad.prem(&Poly::new(e.clone()), &code.h()).unwrap();
                    assert_eq!(bmw_decode(&code, &r, 1), Some(e));
                }
            }
        }
    }
}

#[test]
fn random_single_weight_errors_n17() {
    let code = row_code(17);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let pos = rng.gen_range(0..17);
        let (x, z) = [(1, 0), (1, 1), (0, 1)][rng.gen_range(0..3)];
        let mut xv = vec![0; 17];
        let mut zv = vec![0; 17];
        xv[pos] = x;
        zv[pos] = z;
        let e = physical_to_code(&code, &xv, &zv);
        let d = decode_error(&code, &e).unwrap();
        assert!(d.success);
        assert_eq!(d.e1, e.a);
    }
}
