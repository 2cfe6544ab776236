#include "core/reference.hpp"

namespace iafa::reference {

// (Sum, Cout) per input row 000..111.
const std::array<DesignRow, 8> kCoutFlipTables = {{
    {"AFA1",
     {{0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}},
     3},
    {"AFA2",
     {{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}},
     3},
    {"AFA3",
     {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}},
     3},
    {"AFA4",
     {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}},
     3},
    {"AFA5",
     {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
     3},
    {"AFA6",
     {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {1, 0}, {0, 1}, {0, 1}},
     3},
    {"AFA7",
     {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}},
     3},
    {"AFA8",
     {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {1, 0}},
     3},
}};

const std::array<DesignRow, 8> kSumFlipTables = {{
    {"AFA9",
     {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {1, 0}},
     3},
    {"AFA10",
     {{0, 1}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {1, 0}},
     5},
    {"AFA11",
     {{0, 1}, {1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {1, 0}},
     5},
    {"AFA12",
     {{0, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {1, 0}},
     5},
    {"AFA13",
     {{0, 1}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 0}},
     5},
    {"AFA14",
     {{0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}},
     5},
    {"AFA15",
     {{0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {1, 0}},
     5},
    {"AFA16",
     {{0, 1}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}},
     3},
}};

const DesignRow kEcisTable = {
    "ECIS",
    {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {0, 1}, {0, 1}},
    2};

const std::array<const char *, 5> kCoutFlipAccepted = {"AFA1", "AFA2", "AFA3",
                                                       "AFA5", "AFA8"};
const std::array<const char *, 2> kSumFlipAccepted = {"AFA9", "AFA16"};

const std::array<SerialAdderRow, 2> kExactAdders = {{
    {"Exact 1", 22, 1.90859, false, 176},
    {"Exact 2", 23, 2.00727, false, 184},
}};

const std::array<ApproxAdderRow, 9> kApproxAdders = {{
    {"SIAFA1", 8, 0.67221, false, {134, 120, 106}},
    {"SIAFA2", 10, 0.86032, false, {140, 128, 116}},
    {"SIAFA3", 8, 0.67221, false, {134, 120, 106}},
    {"SIAFA4", 8, 0.67086, false, {134, 120, 106}},
    {"SAFAN", 7, 0.64282, false, {131, 116, 101}},
    {"ICIS1", 6, 0.50709, true, {128, 112, 96}},
    {"ICIS2", 6, 0.50705, true, {128, 112, 96}},
    {"ICIS3", 6, 0.50705, true, {128, 112, 96}},
    {"ECIS", 12, 1.02631, true, {146, 136, 126}},
}};

const std::array<CellCriteriaRow, 4> kCellCriteria = {{
    {"ICIS1", 6, 4, 3, {0.375, 0.001}, {0.125, 0.001}},
    {"ICIS2", 6, 4, 3, {0.375, 0.001}, {0.125, 0.001}},
    {"ICIS3", 6, 4, 3, {0.375, 0.001}, {0.125, 0.001}},
    {"ECIS", 12, 5, 2, {0.25, 0.01}, {0.0833, 0.0001}},
}};

const std::array<ScenarioMetricsRow, 12> kScenarioMetrics = {{
    {"ICIS1", 1, {2.156, 0.001}, {0.0042, 0.0001}},
    {"ICIS2", 1, {2.25, 0.01}, {0.0044, 0.0001}},
    {"ICIS3", 1, {2.25, 0.01}, {0.0044, 0.0001}},
    {"ECIS", 1, {1.718, 0.001}, {0.0033, 0.0001}},
    {"ICIS1", 2, {4.7265, 0.0001}, {0.0092, 0.0001}},
    {"ICIS2", 2, {4.4687, 0.0001}, {0.0087, 0.0001}},
    {"ICIS3", 2, {4.4687, 0.0001}, {0.0087, 0.0001}},
    {"ECIS", 2, {3.6171, 0.0001}, {0.007, 0.001}},
    {"ICIS1", 3, {9.8886, 0.0001}, {0.0193, 0.0001}},
    {"ICIS2", 3, {8.9121, 0.0001}, {0.0174, 0.0001}},
    {"ICIS3", 3, {8.9121, 0.0001}, {0.0174, 0.0001}},
    {"ECIS", 3, {7.3769, 0.0001}, {0.0144, 0.0001}},
}};

// Scenario-3 inputs: steps and energy from the circuit model, NMED from the
// exhaustive metrics, PSNR per application (addition, motion, grayscale).
const std::array<FomRow, 9> kFomRows = {{
    {"SIAFA1", 106, 9.08682, 0.0173, {32.9823, 32.6121, 35.5671}, 29.06734,
     183.102, false},
    {"SIAFA2", 116, 10.02737, 0.0264, {28.2504, 31.6441, 28.4883}, 40.55279,
     101.546, false},
    {"SIAFA3", 106, 9.08682, 0.0173, {32.6497, 32.4096, 35.3588}, 29.2824,
     180.42, false},
    {"SIAFA4", 106, 9.08007, 0.0208, {32.0442, 35.0436, 31.5146}, 29.9061,
     174.169, false},
    {"SAFAN", 101, 8.93987, 0.02166, {30.5866, 37.5336, 28.9472}, 28.61973,
     184.944, false},
    {"ICIS1", 96, 8.26122, 0.0193, {32.0474, 34.928, 30.3889}, 24.91743,
     219.784, true},
    {"ICIS2", 96, 8.26102, 0.0174, {32.9714, 35.2479, 33.9817}, 23.69175,
     242.164, true},
    {"ICIS3", 96, 8.26102, 0.0174, {33.0242, 35.3686, 34.4268}, 23.54914,
     245.104, true},
    {"ECIS", 126, 10.85732, 0.0144, {33.7765, 35.3095, 35.8643}, 39.67634,
     100.483, true},
}};

} // namespace iafa::reference
