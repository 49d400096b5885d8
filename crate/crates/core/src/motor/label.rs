use serde::{Deserialize, Serialize};

/// Semantic part classes. Ids are stable and published with every
/// dataset: Background = 0, then the motor components, then the scene
/// classes Table and Fixture.
#[repr(u8)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartLabel {
    Background = 0,
    PolePot = 1,
    ElectricConnection = 2,
    GearContainer = 3,
    Cover = 4,
    Bolt = 5,
    Magnets = 6,
    Armature = 7,
    LowerGear = 8,
    UpperGear = 9,
    Table = 10,
    Fixture = 11,
}

impl PartLabel {
    pub const ALL: [PartLabel; 12] = [
        PartLabel::Background,
        PartLabel::PolePot,
        PartLabel::ElectricConnection,
        PartLabel::GearContainer,
        PartLabel::Cover,
        PartLabel::Bolt,
        PartLabel::Magnets,
        PartLabel::Armature,
        PartLabel::LowerGear,
        PartLabel::UpperGear,
        PartLabel::Table,
        PartLabel::Fixture,
    ];

    #[inline]
    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Option<Self> {
        Self::ALL.get(id as usize).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            PartLabel::Background => "Background",
            PartLabel::PolePot => "PolePot",
            PartLabel::ElectricConnection => "ElectricConnection",
            PartLabel::GearContainer => "GearContainer",
            PartLabel::Cover => "Cover",
            PartLabel::Bolt => "Bolt",
            PartLabel::Magnets => "Magnets",
            PartLabel::Armature => "Armature",
            PartLabel::LowerGear => "LowerGear",
            PartLabel::UpperGear => "UpperGear",
            PartLabel::Table => "Table",
            PartLabel::Fixture => "Fixture",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == name)
    }

    /// Flat preview color, one distinct hue per class.
    pub fn color(self) -> [u8; 3] {
        match self {
            PartLabel::Background => [20, 20, 24],
            PartLabel::PolePot => [70, 130, 180],
            PartLabel::ElectricConnection => [255, 160, 20],
            PartLabel::GearContainer => [60, 179, 113],
            PartLabel::Cover => [186, 85, 211],
            PartLabel::Bolt => [220, 60, 60],
            PartLabel::Magnets => [240, 230, 80],
            PartLabel::Armature => [100, 220, 220],
            PartLabel::LowerGear => [230, 120, 160],
            PartLabel::UpperGear => [150, 110, 60],
            PartLabel::Table => [120, 120, 120],
            PartLabel::Fixture => [80, 90, 110],
        }
    }
}

impl std::fmt::Display for PartLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_stable() {
        assert_eq!(PartLabel::Background.id(), 0);
        assert_eq!(PartLabel::PolePot.id(), 1);
        assert_eq!(PartLabel::Fixture.id(), 11);
        for (i, l) in PartLabel::ALL.into_iter().enumerate() {
            assert_eq!(l.id() as usize, i);
            assert_eq!(PartLabel::from_id(l.id()), Some(l));
            assert_eq!(PartLabel::from_name(l.name()), Some(l));
        }
        assert_eq!(PartLabel::from_id(12), None);
    }
}
