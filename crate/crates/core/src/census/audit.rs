use alloc::string::String;

use super::solve::{enumerate_quads, CensusResult};
use crate::algebra::{AlgebraModule, QPhi};
use crate::error::{Error, Result};
use crate::exact::PrimeField;
use crate::quad::{AlgebraCarrier, QuadCarrier};

/// `dim Quad_{S/R}(S^2, S) = dim Quad_S(S^2, S) + dim Hom_S(W, S)` over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub census: CensusResult,
    pub dim_w: usize,
    pub dim_hom_w: usize,
    pub holds: bool,
}

/// Compares the census of the carrier with the `W` of the same `S/R`.
pub fn dimension_audit(
    carrier: &AlgebraCarrier<PrimeField>,
    qphi: &QPhi<PrimeField>,
) -> Result<AuditReport> {
    if carrier.over() != &qphi.over {
        return Err(Error::InconsistentInputs(String::from(
            "census carrier and Q are built from different S/R",
        )));
    }
    if carrier.rank() != 2 || !carrier.is_regular() {
        return Err(Error::InconsistentInputs(String::from(
            "the audit compares maps S^2 -> S",
        )));
    }
    let census = enumerate_quads(carrier)?;
    let dim_hom_w = qphi
        .w_module
        .hom_space(&AlgebraModule::regular(qphi.s()))?
        .dim();
    let holds = census.dim_relative == census.dim_absolute + dim_hom_w;
    Ok(AuditReport {
        census,
        dim_w: qphi.dim_w(),
        dim_hom_w,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q_phi, AlgebraOver, FiniteDimAlgebra};

    #[test]
    fn rejects_mismatched_inputs() {
        let f2 = PrimeField::new(2).unwrap();
        let a = AlgebraOver::over_field(FiniteDimAlgebra::truncated(f2, "T", 2).unwrap());
        let b = AlgebraOver::over_field(FiniteDimAlgebra::univariate(f2, &[1, 1, 1], "a").unwrap());
        let carrier = AlgebraCarrier::regular(a, 2).enumerable();
        let q = q_phi(&b).unwrap();
        assert!(matches!(
            dimension_audit(&carrier, &q),
            Err(Error::InconsistentInputs(_))
        ));
    }

    #[test]
    fn dual_numbers_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        let over = AlgebraOver::over_field(FiniteDimAlgebra::truncated(f2, "T", 2).unwrap());
        let q = q_phi(&over).unwrap();
        let r = dimension_audit(&AlgebraCarrier::regular(over, 2).enumerable(), &q).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(r.dim_hom_w > 0);
    }
}
