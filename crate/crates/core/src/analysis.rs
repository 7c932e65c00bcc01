//! Everything computed about one group or one fusion ring, in one place.

use alloc::vec::Vec;

use crate::centerdual::{
    abelian_invariants, abelianization_dual, restriction_tmap, AbelianGroupStructure,
    RestrictionMap,
};
use crate::chaingroup::{
    chain_classes_union_find, chain_group_snf, ChainClassPartition, ChainGroupError,
    ChainGroupPresentation,
};
use crate::charmod::{character_table_mod_p, ModularCharacterTable};
use crate::fusion::{fusion_from_character_table, FusionRing};
use crate::groups::{ConjugacyClassPartition, FiniteGroup};
use crate::Error;

/// Chain group of a fusion ring, by both methods.
#[derive(Clone, Debug)]
pub struct RingAnalysis {
    pub ring: FusionRing,
    pub presentation: ChainGroupPresentation,
    /// An error here means the class product is not a well-defined abelian
    /// group law; verification reports it as a failure.
    pub partition: Result<ChainClassPartition, ChainGroupError>,
}

impl RingAnalysis {
    pub fn new(ring: FusionRing) -> Self {
        let presentation = chain_group_snf(&ring);
        let partition = chain_classes_union_find(&ring);
        Self {
            ring,
            presentation,
            partition,
        }
    }
}

/// A finite group with its character table, fusion ring, chain group,
/// center and restriction map.
#[derive(Clone, Debug)]
pub struct GroupAnalysis {
    pub group: FiniteGroup,
    pub classes: ConjugacyClassPartition,
    pub table: ModularCharacterTable,
    pub ring: RingAnalysis,
    pub center: AbelianGroupStructure,
    pub restriction: RestrictionMap,
    pub abelianization: Vec<u64>,
}

impl GroupAnalysis {
    pub fn new(group: FiniteGroup) -> Result<Self, Error> {
        let classes = group.conjugacy_classes();
        let table = character_table_mod_p(&group, &classes)?;
        Self::with_table(group, classes, table)
    }

    /// Reuses a previously computed table (e.g. from a cache). The table's
    /// classes must be `classes`.
    pub fn with_table(
        group: FiniteGroup,
        classes: ConjugacyClassPartition,
        table: ModularCharacterTable,
    ) -> Result<Self, Error> {
        let ring = fusion_from_character_table(&table)?;
        Self::with_ring(group, classes, table, ring)
    }

    /// Reuses both a table and its fusion ring.
    pub fn with_ring(
        group: FiniteGroup,
        classes: ConjugacyClassPartition,
        table: ModularCharacterTable,
        ring: FusionRing,
    ) -> Result<Self, Error> {
        let center = abelian_invariants(&group, &group.center())?;
        let restriction = restriction_tmap(&table, &classes, &ring, &center)?;
        let abelianization = abelianization_dual(&ring)?;
        Ok(Self {
            group,
            classes,
            table,
            ring: RingAnalysis::new(ring),
            center,
            restriction,
            abelianization,
        })
    }
}
