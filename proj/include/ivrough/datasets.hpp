#pragma once
// Bundled example datasets, embedded so commands that reproduce the reference
// results need no external files.  The same text ships as data/table1.csv and
// data/face27.csv for command-line use.

namespace ivrough::datasets {

// 5 objects x 4 attributes, small demonstration system.
inline constexpr const char* table1_csv = R"CSV(# Interval-valued dataset: 5 objects, 4 attributes.
object,a1,a2,a3,a4
x1,0:0.5,0.2:0.7,0.3:0.6,0.1:0.3
x2,0.2:0.6,0:0.5,0.1:0.7,0.3:0.7
x3,0.1:0.8,0.3:0.8,0:0.8,0.5:0.9
x4,0:0.9,0.4:1,0.2:0.6,0.6:1
x5,0.6:1,0.1:0.5,0.3:0.9,0.8:1
)CSV";

// 27 objects x 6 attributes of facial interval measurements.
inline constexpr const char* face27_csv = R"CSV(# Face-measurement dataset: 27 objects, 6 interval attributes.
object,AD,BC,AH,DH,EH,GH
FRA1,155.00:157.00,58.00:61.01,100.45:103.28,105.00:107.30,61.40:65.73,64.20:67.80
FRA2,154.00:160.01,57.00:64.00,101.98:105.55,104.35:107.30,60.88:63.03,62.94:66.47
FRA3,154.01:161.00,57.00:63.00,99.36:105.65,101.04:109.04,60.95:65.60,60.42:66.40
HUS1,168.86:172.84,58.55:63.39,102.83:106.53,122.38:124.52,56.73:61.07,60.44:64.54
HUS2,169.85:175.03,60.21:64.38,102.94:108.71,120.24:124.52,56.73:62.37,60.44:66.84
HUS3,168.76:175.15,61.40:63.51,104.35:107.45,120.93:125.18,57.20:61.72,58.14:67.08
INC1,155.26:160.45,53.15:60.21,95.88:98.49,91.68:94.37,62.48:66.22,58.90:63.13
INC2,156.26:161.31,51.09:60.07,95.77:99.36,91.21:96.83,54.92:64.20,54.41:61.55
INC3,154.47:160.31,55.08:59.03,93.54:98.98,90.43:96.43,59.03:65.86,55.97:65.80
ISA1,164.00:168.00,55.01:60.03,120.28:123.04,117.52:121.02,54.38:57.45,50.80:53.25
ISA2,163.00:170.00,54.04:59.00,118.80:123.04,116.67:120.24,55.47:58.67,52.43:55.23
ISA3,164.01:169.01,55.00:59.01,117.38:123.11,116.67:122.43,52.80:58.31,52.20:55.47
JPL1,167.11:171.19,61.03:65.01,118.23:121.82,108.30:111.20,63.89:67.88,57.28:60.83
JPL2,169.14:173.18,60.07:65.07,118.85:120.88,108.98:113.17,62.63:69.07,57.38:61.62
JPL3,169.03:170.11,59.01:65.01,115.88:121.38,110.34:112.49,61.72:68.25,59.46:62.94
KHA1,149.34:155.54,54.15:59.14,111.95:115.75,105.36:111.07,54.20:58.14,48.27:50.61
KHA2,149.34:155.32,52.04:58.22,111.20:113.22,105.36:111.07,53.71:58.14,49.41:52.80
KHA3,150.33:157.26,52.09:60.21,109.04:112.70,104.74:111.07,55.47:60.03,49.20:53.41
LOT1,152.64:157.62,51.35:56.22,116.73:119.67,114.62:117.41,55.44:59.55,53.01:56.60
LOT2,154.64:157.62,52.24:56.32,117.52:119.67,114.28:117.41,57.63:60.61,54.41:57.98
LOT3,154.83:157.81,50.36:55.23,117.59:119.75,114.04:116.83,56.64:61.07,55.23:57.80
PHI1,163.08:167.07,66.03:68.07,115.26:119.60,116.10:121.02,60.96:65.30,57.01:59.82
PHI2,164.00:168.03,65.03:68.12,114.55:119.60,115.26:120.97,60.96:67.27,55.32:61.52
PHI3,161.01:167.00,64.07:69.01,116.67:118.79,114.59:118.83,61.52:68.68,56.57:60.11
ROM1,167.15:171.24,64.07:68.07,123.75:126.59,122.92:126.37,51.22:54.64,49.65:53.71
ROM2,168.15:172.14,63.13:68.07,122.33:127.29,124.08:127.14,50.22:57.14,49.93:56.94
ROM3,167.11:171.19,63.13:68.03,121.62:126.57,122.58:127.78,49.41:57.28,50.99:60.46
)CSV";

}  // namespace ivrough::datasets
