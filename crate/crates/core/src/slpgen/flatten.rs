//! Tracing the fast and schoolbook products into programs.

use crate::algebra::{mul_schoolbook, DiracNumber, MultTable, DIM};
use crate::fastmult::{Stage, VerifiedPipeline};

use super::program::{Instr, SLProgram};
use super::traced::{TapeRef, Traced};

fn loads(tape: &TapeRef, n: usize, op: fn(usize) -> Instr) -> Vec<Traced> {
    (0..n).map(|i| Traced::record(tape, op(i))).collect()
}

fn finish(tape: TapeRef, y: &[Traced], a_arity: usize, b_arity: usize) -> SLProgram {
    for (i, v) in y.iter().enumerate() {
        let x = v.node(&tape);
        tape.borrow_mut().instrs.push(Instr::StoreY(i, x));
    }
    let instrs = std::mem::take(&mut tape.borrow_mut().instrs);
    SLProgram::new(instrs, a_arity, b_arity, y.len()).expect("traced programs are well formed")
}

fn dirac(v: Vec<Traced>) -> DiracNumber<Traced> {
    DiracNumber::new(v.try_into().expect("16 coefficients"))
}

/// The pipeline as a program. With `include_precompute` the `b` inputs are
/// the 16 coefficients and the block entries are computed in-program;
/// otherwise `b` holds the precomputed block entries in block order.
pub fn flatten(pipeline: &VerifiedPipeline, include_precompute: bool) -> SLProgram {
    let tape = TapeRef::default();
    let a = dirac(loads(&tape, DIM, Instr::LoadA));
    let spec = pipeline.d_spec();
    let (vals, b_arity) = if include_precompute {
        let b = dirac(loads(&tape, DIM, Instr::LoadB));
        (pipeline.precompute(&b), DIM)
    } else {
        let n = spec.entry_count();
        let flat = loads(&tape, n, Instr::LoadB);
        (spec.values_from_flat(flat).expect("entry count matches"), n)
    };
    let y = pipeline.apply(&vals, &a);
    finish(tape, &y.coeffs, DIM, b_arity)
}

pub fn flatten_schoolbook(t: &MultTable) -> SLProgram {
    let tape = TapeRef::default();
    let a = dirac(loads(&tape, DIM, Instr::LoadA));
    let b = dirac(loads(&tape, DIM, Instr::LoadB));
    let y = mul_schoolbook(&a, &b, t);
    finish(tape, &y.coeffs, DIM, DIM)
}

/// A constant stage on its own; its inputs are the `a` loads.
///
/// # Panics
/// On the block-diagonal stage, which needs `b`.
pub fn flatten_stage(stage: &Stage) -> SLProgram {
    assert!(!stage.is_block_diag(), "flatten_stage needs a constant stage");
    let tape = TapeRef::default();
    let x = loads(&tape, stage.in_dim(), Instr::LoadA);
    let y = stage.apply_const(&x);
    finish(tape, &y, stage.in_dim(), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::DyadicRational;
    use crate::fastmult::{builtin_pipeline, measure_costs, Level};
    use crate::slpgen::interpret;

    fn ints(seed: i64) -> [DyadicRational; DIM] {
        std::array::from_fn(|i| DyadicRational::from_int((i as i64 * 7 + seed) % 23 - 11))
    }

    #[test]
    fn level3_histogram() {
        let p = flatten(builtin_pipeline(Level::Three), true);
        let h = p.histogram();
        assert_eq!(h.mul, 88);
        assert_eq!(h.store, 16);
        let c = measure_costs(builtin_pipeline(Level::Three));
        assert_eq!(h.add_sub() as u64, c.total().additions);
        assert_eq!(h.neg as u64, c.total().negations);
        assert_eq!(h.shift as u64, c.total().shifts);
    }

    #[test]
    fn schoolbook_histogram() {
        let h = flatten_schoolbook(&MultTable::from_generators()).histogram();
        assert_eq!((h.mul, h.add_sub()), (256, 240));
    }

    #[test]
    fn butterfly_stage() {
        let s = Stage::parse("h", "structural\nversion 1\ndims 2 2\nexpr kron(H2, I1)\n").unwrap();
        let h = flatten_stage(&s).histogram();
        assert_eq!((h.add_sub(), h.mul), (2, 0));
    }

    #[test]
    fn matches_fast_product() {
        let (a, b) = (DiracNumber::new(ints(3)), DiracNumber::new(ints(8)));
        let want = mul_schoolbook(&a, &b, &MultTable::from_generators());
        for lv in Level::ALL {
            let vp = builtin_pipeline(lv);
            let p = flatten(vp, true);
            assert_eq!(interpret(&p, &a.coeffs, &b.coeffs).unwrap(), want.coeffs.to_vec(), "{lv}");
            let vals: Vec<_> = vp.precompute(&b).flat().cloned().collect();
            let q = flatten(vp, false);
            assert_eq!(q.b_arity(), vals.len());
            assert_eq!(interpret(&q, &a.coeffs, &vals).unwrap(), want.coeffs.to_vec());
        }
    }
}
