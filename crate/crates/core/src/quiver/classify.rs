//! Representation type of an acyclic superspecies read off its quiver Q_S.

use super::{classify_diagram, positive_roots, RepType};
use crate::error::Result;
use crate::species::Superspecies;

/// Finite iff every component of Q_S is Dynkin, tame iff every component is
/// Dynkin or extended Dynkin, wild otherwise.
pub fn classify_via_quiver(s: &Superspecies) -> Result<RepType> {
    s.check_acyclic()?;
    Ok(classify_diagram(&s.quiver_of().underlying_diagram()).rep_type())
}

/// Number of positive roots of Q_S; `None` when Q_S is not Dynkin.
pub fn predicted_indec_count(s: &Superspecies) -> Result<Option<usize>> {
    if classify_via_quiver(s)? != RepType::Finite {
        return Ok(None);
    }
    Ok(Some(positive_roots(&s.quiver_of().underlying_diagram())?.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::species::{Bimodule, Label};

    #[test]
    fn examples() {
        let a22 = Superspecies::new(vec![Label::K, Label::K, Label::D, Label::D])
            .with(0, 1, Bimodule::KK { d0: 1, d1: 0 })
            .with(1, 2, Bimodule::KtoD { rank: 1 })
            .with(2, 3, Bimodule::DD { plus: 1, minus: 0 });
        assert_eq!(classify_via_quiver(&a22).unwrap(), RepType::Finite);
        assert_eq!(predicted_indec_count(&a22).unwrap(), Some(36));

        let k3 = Superspecies::new(vec![Label::K, Label::K]).with(0, 1, Bimodule::KK { d0: 3, d1: 0 });
        assert_eq!(classify_via_quiver(&k3).unwrap(), RepType::Wild);
        assert_eq!(predicted_indec_count(&k3).unwrap(), None);

        let kd = Superspecies::new(vec![Label::K, Label::D]).with(0, 1, Bimodule::KtoD { rank: 1 });
        assert_eq!(predicted_indec_count(&kd).unwrap(), Some(6));
        assert_eq!(predicted_indec_count(&Superspecies::new(vec![Label::K])).unwrap(), Some(2));
        assert_eq!(predicted_indec_count(&Superspecies::new(vec![Label::D])).unwrap(), Some(1));

        let lp = Superspecies::new(vec![Label::K]).with(0, 0, Bimodule::KK { d0: 1, d1: 0 });
        assert!(classify_via_quiver(&lp).is_err());
    }
}
