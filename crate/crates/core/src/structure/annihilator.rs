use serde::Serialize;

use crate::algebra::{CentralElement, GroupAlgebra};
use crate::error::{Error, Result};
use crate::structure::{DDecomposition, StandingForm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnihilatorReport {
    /// Number of filtered classes of `G`.
    pub filtered_classes: usize,
    /// `dim Ann_{Z(F_pD)}` of their images.
    pub annihilator_dim: usize,
    /// The annihilator lies in `(D')⁺·F_pD`.
    pub contained_in_derived_plus: bool,
    /// Size of the reduced generating set.
    pub generator_count: usize,
    /// The reduced generating set has the same annihilator.
    pub generators_agree: bool,
}

/// Computes the annihilator in `Z(F_pD)` of the radical basis elements of the
/// images of the filtered classes, checks that it lies in `(D')⁺·F_pD`, and
/// that the smaller generating set built from `Z_D` and the `T_i` has the
/// same annihilator.
pub fn verify_annihilators(
    sf: &StandingForm<'_>,
    dd: &DDecomposition,
    ideal: bool,
) -> Result<AnnihilatorReport> {
    sf.require()?;
    if !ideal {
        return Err(Error::Inapplicable("socle is not an ideal".into()));
    }
    let g = sf.group;
    let d = dd.d();
    let q = &dd.quotient;
    let ga = GroupAlgebra::new(g, sf.p)?;
    let da = GroupAlgebra::new(d, sf.p)?;
    let fp = da.prime();
    let clp = ga.clp_prime()?;

    let radical_element = |k: usize| -> CentralElement {
        let mut b = da.class_sum(k);
        let size = d.conjugacy_classes()[k].size() as u64;
        b.coords[0] = fp.sub(b.coords[0], fp.reduce(size));
        b
    };
    let mut image_classes: Vec<usize> = clp
        .iter()
        .map(|&k| d.class_of(q.proj(g.conjugacy_classes()[k].representative)))
        .collect();
    image_classes.sort_unstable();
    image_classes.dedup();
    let images: Vec<CentralElement> = image_classes.iter().map(|&k| radical_element(k)).collect();
    let ann = da.annihilator_in_center(&images);
    let contained_in_derived_plus = {
        let expanded = da.expand_subspace(&ann);
        da.gprime_plus_fg().contains(&expanded)?
    };

    let mut generators: Vec<CentralElement> = (1..d.class_count())
        .filter(|&k| {
            d.conjugacy_classes()[k]
                .elements
                .iter()
                .all(|&x| dd.zd.contains(x))
        })
        .map(radical_element)
        .collect();
    for f in &dd.factors {
        let sum = da.subset_sum(f.elements());
        generators.push(
            da.restrict(&sum).ok_or_else(|| {
                Error::Consistency("a factor of T is not a union of classes".into())
            })?,
        );
    }
    let reduced = da.annihilator_in_center(&generators);
    let report = AnnihilatorReport {
        filtered_classes: clp.len(),
        annihilator_dim: ann.dim(),
        contained_in_derived_plus,
        generator_count: generators.len(),
        generators_agree: reduced.space == ann.space,
    };
    if !report.contained_in_derived_plus || !report.generators_agree {
        return Err(Error::Consistency(format!(
            "annihilator statements fail: {report:?}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{agl1, sl2};
    use crate::structure::{check_standing_form, decompose_d};

    #[test]
    fn sl23_uses_one_generator() {
        let g = sl2(3).unwrap();
        let sf = check_standing_form(&g, 2);
        let dd = decompose_d(&sf).unwrap();
        let r = verify_annihilators(&sf, &dd, true).unwrap();
        assert_eq!(r.generator_count, 1);
    }

    #[test]
    fn agl8_passes() {
        let g = agl1(8).unwrap();
        let sf = check_standing_form(&g, 2);
        let dd = decompose_d(&sf).unwrap();
        let r = verify_annihilators(&sf, &dd, true).unwrap();
        assert!(r.generators_agree && r.contained_in_derived_plus);
    }
}
