use serde::{Deserialize, Serialize};

use crate::Scalar;

/// Number of gears distinguishes the two building graphs: Type-A motors
/// carry two gears, Type-B motors one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MotorType {
    A,
    B,
}

impl std::fmt::Display for MotorType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MotorType::A => "A",
            MotorType::B => "B",
        })
    }
}

/// Exterior-only models versus models with interior parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetailLevel {
    ExteriorOnly,
    WithInterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolePotSpec {
    /// Overall axial extent of the pot (m).
    pub length: Scalar,
    pub diameter: Scalar,
    /// Bottom cap shape: 1 flat, 2 domed, 3 stepped.
    pub cap_profile: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConnectionSpec {
    /// Tangential width (m).
    pub width: Scalar,
    /// Axial height (m).
    pub height: Scalar,
    /// Radial depth (m).
    pub depth: Scalar,
    /// Position around the pole pot (rad).
    pub angular_offset: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GearContainerSpec {
    /// Outline styling: 1 smooth lobes, 2 faceted / squared second lobe.
    pub variant: u8,
    /// Axial height of the container (m).
    pub height: Scalar,
    /// Radius of the main lobe over the pole pot mouth (m).
    pub lobe1_radius: Scalar,
    /// Radius of the second lobe (Type-A only, 0 for Type-B).
    pub lobe2_radius: Scalar,
    /// Center distance between the lobes (Type-A only, 0 for Type-B).
    pub lobe_offset: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverSpec {
    /// Mounting-point option: number of bosses on the extension tab (1-3).
    pub variant: u8,
    /// Tab shape: 1 circular, 2 rectangular, 3 triangular (Type-A only).
    pub extension_shape: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoltHeadStyle {
    Hex,
    Socket,
}

/// Bolt placement: evenly spaced on a circle or explicit flange points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoltLayout {
    Circle { radius: Scalar },
    Explicit { positions: Vec<[Scalar; 2]> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoltSpec {
    pub count: u32,
    pub head_style: BoltHeadStyle,
    pub head_radius: Scalar,
    pub shank_radius: Scalar,
    pub layout: BoltLayout,
}

impl BoltSpec {
    /// Bolt centers on the cover flange, in container-local coordinates.
    pub fn positions(&self) -> Vec<[Scalar; 2]> {
        match &self.layout {
            BoltLayout::Circle { radius } => (0..self.count)
                .map(|i| {
                    let a = std::f64::consts::TAU * i as Scalar / self.count as Scalar;
                    [radius * a.cos(), radius * a.sin()]
                })
                .collect(),
            BoltLayout::Explicit { positions } => positions.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MagnetSpec {
    pub count: u32,
    /// Angular span of each magnet (rad).
    pub arc_span: Scalar,
    /// Radial thickness (m).
    pub thickness: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArmatureSpec {
    pub shaft_radius: Scalar,
    pub shaft_length: Scalar,
    pub core_radius: Scalar,
    pub core_length: Scalar,
    pub slot_count: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GearSpec {
    pub teeth: u32,
    pub outer_radius: Scalar,
    pub root_radius: Scalar,
    pub bore_radius: Scalar,
    pub thickness: Scalar,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InteriorSpec {
    pub magnets: MagnetSpec,
    pub armature: ArmatureSpec,
    pub lower_gear: GearSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_gear: Option<GearSpec>,
}

/// Full parameter vector describing one motor variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MotorSpec {
    pub motor_type: MotorType,
    pub detail: DetailLevel,
    pub pole_pot: PolePotSpec,
    pub electric_connection: ConnectionSpec,
    pub gear_container: GearContainerSpec,
    pub cover: CoverSpec,
    pub bolts: BoltSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior: Option<InteriorSpec>,
    pub rng_seed: u64,
}

impl MotorSpec {
    /// Canonical structured-text form: JSON with sorted keys.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("spec serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("spec serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Wall thickness of the pole pot (m).
pub const POT_WALL: Scalar = 0.002;
/// Wall and floor thickness of the gear container (m).
pub const CONTAINER_WALL: Scalar = 0.002;
/// Cover plate thickness (m).
pub const COVER_THICKNESS: Scalar = 0.003;
/// Assembly clearance between mating parts (m).
pub const PART_GAP: Scalar = 0.0005;
/// Small mating gap used where parts would otherwise touch (m).
pub const MATE_GAP: Scalar = 1e-4;
/// Clearance between magnets and the pot inner wall (m).
pub const MAGNET_GAP: Scalar = 2e-4;
/// Gear radial clearance to the container inner wall, in wall units plus
/// an absolute margin; keeps gears off the inner offset miter near the
/// lobe junction.
pub fn gear_radial_limit(lobe_radius: Scalar) -> Scalar {
    lobe_radius - 2.5 * CONTAINER_WALL - 0.0005
}

/// One violated spec invariant; `field` is a dotted path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecViolation {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn positive(v: Scalar, field: &str, out: &mut Vec<SpecViolation>) {
    if !(v > 0.0) {
        out.push(SpecViolation {
            field: field.to_string(),
            message: format!("non-positive dimension ({v})"),
        });
    }
}

/// Check every invariant of a spec; returns all violations, not just the
/// first one. An empty list means the spec is buildable.
pub fn validate_spec(spec: &MotorSpec) -> Vec<SpecViolation> {
    let mut out = Vec::new();
    let v = &mut out;

    positive(spec.pole_pot.length, "pole_pot.length", v);
    positive(spec.pole_pot.diameter, "pole_pot.diameter", v);
    positive(spec.electric_connection.width, "electric_connection.width", v);
    positive(spec.electric_connection.height, "electric_connection.height", v);
    positive(spec.electric_connection.depth, "electric_connection.depth", v);
    positive(spec.gear_container.height, "gear_container.height", v);
    positive(spec.gear_container.lobe1_radius, "gear_container.lobe1_radius", v);
    positive(spec.bolts.head_radius, "bolts.head_radius", v);
    positive(spec.bolts.shank_radius, "bolts.shank_radius", v);

    if !(1..=3).contains(&spec.pole_pot.cap_profile) {
        v.push(SpecViolation {
            field: "pole_pot.cap_profile".into(),
            message: format!("cap profile must be 1-3, got {}", spec.pole_pot.cap_profile),
        });
    }
    if !(1..=2).contains(&spec.gear_container.variant) {
        v.push(SpecViolation {
            field: "gear_container.variant".into(),
            message: format!("container variant must be 1-2, got {}", spec.gear_container.variant),
        });
    }
    if !(1..=3).contains(&spec.cover.variant) {
        v.push(SpecViolation {
            field: "cover.variant".into(),
            message: format!("cover variant must be 1-3, got {}", spec.cover.variant),
        });
    }
    let max_ext = match spec.motor_type {
        MotorType::A => 3,
        MotorType::B => 2,
    };
    if spec.cover.extension_shape < 1 || spec.cover.extension_shape > max_ext {
        v.push(SpecViolation {
            field: "cover.extension_shape".into(),
            message: format!(
                "extension shape must be 1-{max_ext} for Type-{}, got {}",
                spec.motor_type, spec.cover.extension_shape
            ),
        });
    }

    match spec.detail {
        DetailLevel::WithInterior if spec.interior.is_none() => v.push(SpecViolation {
            field: "interior".into(),
            message: "interior parts required for a with-interior spec".into(),
        }),
        DetailLevel::ExteriorOnly if spec.interior.is_some() => v.push(SpecViolation {
            field: "interior".into(),
            message: "interior parts present on an exterior-only spec".into(),
        }),
        _ => {}
    }

    // container shape
    let pot_r = spec.pole_pot.diameter * 0.5;
    let gc = &spec.gear_container;
    if gc.lobe1_radius < pot_r + 0.001 {
        v.push(SpecViolation {
            field: "gear_container.lobe1_radius".into(),
            message: "main lobe must cover the pole pot mouth".into(),
        });
    }
    match spec.motor_type {
        MotorType::A => {
            positive(gc.lobe2_radius, "gear_container.lobe2_radius", v);
            positive(gc.lobe_offset, "gear_container.lobe_offset", v);
            if gc.lobe2_radius >= gc.lobe1_radius {
                v.push(SpecViolation {
                    field: "gear_container.lobe2_radius".into(),
                    message: "second lobe must be smaller than the main lobe".into(),
                });
            } else {
                if gc.lobe_offset <= gc.lobe1_radius - gc.lobe2_radius + 0.002 {
                    v.push(SpecViolation {
                        field: "gear_container.lobe_offset".into(),
                        message: "second lobe swallowed by the main lobe".into(),
                    });
                }
                if gc.lobe_offset >= gc.lobe1_radius + gc.lobe2_radius - 0.002 {
                    v.push(SpecViolation {
                        field: "gear_container.lobe_offset".into(),
                        message: "lobes must overlap".into(),
                    });
                }
            }
        }
        MotorType::B => {
            if gc.lobe2_radius != 0.0 || gc.lobe_offset != 0.0 {
                v.push(SpecViolation {
                    field: "gear_container.lobe2_radius".into(),
                    message: "Type-B containers have a single lobe".into(),
                });
            }
        }
    }

    // bolts
    if spec.bolts.count < 2 {
        v.push(SpecViolation {
            field: "bolts.count".into(),
            message: format!("need at least 2 bolts, got {}", spec.bolts.count),
        });
    }
    if spec.bolts.shank_radius >= spec.bolts.head_radius {
        v.push(SpecViolation {
            field: "bolts.shank_radius".into(),
            message: "shank must be thinner than the head".into(),
        });
    }
    if let BoltLayout::Explicit { positions } = &spec.bolts.layout {
        if positions.len() != spec.bolts.count as usize {
            v.push(SpecViolation {
                field: "bolts.layout".into(),
                message: format!(
                    "{} explicit positions for {} bolts",
                    positions.len(),
                    spec.bolts.count
                ),
            });
        }
    }
    let positions = spec.bolts.positions();
    let head_r = spec.bolts.head_radius;
    for (i, p) in positions.iter().enumerate() {
        let in_lobe1 = (p[0] * p[0] + p[1] * p[1]).sqrt() <= gc.lobe1_radius - head_r - 0.001;
        let in_lobe2 = spec.motor_type == MotorType::A && {
            let dx = p[0] - gc.lobe_offset;
            (dx * dx + p[1] * p[1]).sqrt() <= gc.lobe2_radius - head_r - 0.001
        };
        if !(in_lobe1 || in_lobe2) {
            v.push(SpecViolation {
                field: format!("bolts.layout[{i}]"),
                message: "bolt outside the cover flange".into(),
            });
        }
    }
    for i in 0..positions.len() {
        for j in i + 1..positions.len() {
            let dx = positions[i][0] - positions[j][0];
            let dy = positions[i][1] - positions[j][1];
            if (dx * dx + dy * dy).sqrt() < 2.0 * head_r {
                v.push(SpecViolation {
                    field: format!("bolts.layout[{i},{j}]"),
                    message: "bolt overlap".into(),
                });
            }
        }
    }

    // interior
    if let Some(interior) = &spec.interior {
        if spec.motor_type == MotorType::B && interior.upper_gear.is_some() {
            v.push(SpecViolation {
                field: "interior.upper_gear".into(),
                message: "upper gear forbidden for Type-B".into(),
            });
        }
        if spec.motor_type == MotorType::A && interior.upper_gear.is_none() {
            v.push(SpecViolation {
                field: "interior.upper_gear".into(),
                message: "Type-A motors carry two gears".into(),
            });
        }

        let m = &interior.magnets;
        positive(m.arc_span, "interior.magnets.arc_span", v);
        positive(m.thickness, "interior.magnets.thickness", v);
        if m.count < 2 {
            v.push(SpecViolation {
                field: "interior.magnets.count".into(),
                message: "need at least 2 magnets".into(),
            });
        } else if m.count as Scalar * m.arc_span > std::f64::consts::TAU * 0.95 {
            v.push(SpecViolation {
                field: "interior.magnets.arc_span".into(),
                message: "magnet arcs leave no gap".into(),
            });
        }

        let a = &interior.armature;
        positive(a.shaft_radius, "interior.armature.shaft_radius", v);
        positive(a.shaft_length, "interior.armature.shaft_length", v);
        positive(a.core_radius, "interior.armature.core_radius", v);
        positive(a.core_length, "interior.armature.core_length", v);
        if !(4..=24).contains(&a.slot_count) {
            v.push(SpecViolation {
                field: "interior.armature.slot_count".into(),
                message: format!("slot count must be 4-24, got {}", a.slot_count),
            });
        }
        if a.shaft_radius >= a.core_radius {
            v.push(SpecViolation {
                field: "interior.armature.core_radius".into(),
                message: "core must be thicker than the shaft".into(),
            });
        }
        if a.core_length >= a.shaft_length {
            v.push(SpecViolation {
                field: "interior.armature.core_length".into(),
                message: "core cannot be longer than the shaft".into(),
            });
        }
        let pot_inner = pot_r - POT_WALL;
        let magnet_inner = pot_inner - MAGNET_GAP - m.thickness;
        if a.core_radius + PART_GAP > magnet_inner {
            v.push(SpecViolation {
                field: "interior.armature.core_radius".into(),
                message: "armature core collides with the magnets".into(),
            });
        }
        if a.shaft_length > spec.pole_pot.length - POT_WALL - 0.002 {
            v.push(SpecViolation {
                field: "interior.armature.shaft_length".into(),
                message: "armature does not fit inside the pole pot".into(),
            });
        }

        let mut gear_budget = gc.height - CONTAINER_WALL - 0.001;
        for (gear, limit, field) in [
            (
                Some(&interior.lower_gear),
                gear_radial_limit(gc.lobe1_radius),
                "interior.lower_gear",
            ),
            (
                interior.upper_gear.as_ref(),
                gear_radial_limit(gc.lobe2_radius),
                "interior.upper_gear",
            ),
        ] {
            let Some(g) = gear else { continue };
            if g.teeth < 4 {
                v.push(SpecViolation {
                    field: format!("{field}.teeth"),
                    message: format!("need at least 4 teeth, got {}", g.teeth),
                });
            }
            positive(g.thickness, &format!("{field}.thickness"), v);
            if !(g.bore_radius >= 0.0004
                && g.bore_radius < g.root_radius - 0.0003
                && g.root_radius < g.outer_radius)
            {
                v.push(SpecViolation {
                    field: format!("{field}.root_radius"),
                    message: "gear radii must satisfy bore < root < outer".into(),
                });
            }
            if g.outer_radius > limit {
                v.push(SpecViolation {
                    field: format!("{field}.outer_radius"),
                    message: "gear does not clear the container wall".into(),
                });
            }
            gear_budget -= g.thickness + PART_GAP;
        }
        if gear_budget < 0.0 {
            v.push(SpecViolation {
                field: "interior.lower_gear.thickness".into(),
                message: "gears do not fit inside the container height".into(),
            });
        }
    }

    out
}
