use thiserror::Error;

use crate::centerdual::CenterError;
use crate::chaingroup::ChainGroupError;
use crate::charmod::CharTableError;
use crate::fusion::FusionError;
use crate::groups::GroupError;

/// Any failure of the analysis pipeline, tagged with the stage it came from.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("groups: {0}")]
    Group(#[from] GroupError),
    #[error("charmod: {0}")]
    CharTable(#[from] CharTableError),
    #[error("fusion: {0}")]
    Fusion(#[from] FusionError),
    #[error("chaingroup: {0}")]
    ChainGroup(#[from] ChainGroupError),
    #[error("centerdual: {0}")]
    Center(#[from] CenterError),
}
