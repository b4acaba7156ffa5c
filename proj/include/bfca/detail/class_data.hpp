#pragma once

// The 48 affine classes of 5-variable functions: representative,
// normal form, orbit size. Same content as data/affine_classes_5.csv.

#include <string_view>

namespace bfca::detail {

inline constexpr std::string_view kClassTableCsv = R"csv(rep_hex,anf,expected_count
aa55aa55,x0 + x3 + 1,64
aa55ab55,x0x1x2x3x4 + x0x1x2x3 + x0x1x3x4 + x0x1x3 + x0x2x3x4 + x0x2x3 + x0x3x4 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x3x4 + x1x3 + x2x3x4 + x2x3 + x3x4 + 1,2048
aa55bb55,x0x1x3x4 + x0x1x3 + x0x3x4 + x0x3 + x0 + x1x3x4 + x1x3 + x3x4 + 1,31744
aa5dbb55,x0x1x2x3x4 + x0x1x2x4 + x0x1x3 + x0x1x4 + x0x3x4 + x0x3 + x0 + x1x3x4 + x1x3 + x3x4 + 1,317440
aaddbb55,x0x1x3 + x0x1x4 + x0x3x4 + x0x3 + x0 + x1x3x4 + x1x3 + x3x4 + 1,79360
aa5dbb51,x0x1x2x3 + x0x1x2 + x0x1x3x4 + x0x1 + x0x3x4 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,2222080
2a5dbb51,x0x1x2x3x4 + x0x1x2x3 + x0x1x2 + x0x1x3x4 + x0x1 + x0x3x4 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,10665984
aaddbb51,x0x1x2x3x4 + x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1 + x0x3x4 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,2222080
2a5dbf51,x0x1x2 + x0x1x3 + x0x1 + x0x3x4 + x0x3 + x0 + x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x1 + x3x4 + 1,1777664
6a5dbb51,x0x1x2x3 + x0x1x2 + x0x1x3x4 + x0x1 + x0x3x4 + x0x3 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,28442624
2addbb51,x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1 + x0x3x4 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,26664960
a8ddbb51,x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3x4 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,1111040
aeddda51,x0x1x2x3x4 + x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,28442624
0a5dbf51,x0x1x2x3x4 + x0x1x2 + x0x1x3 + x0x1 + x0x2x3x4 + x0x3x4 + x0x3 + x0 + x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x1 + x3x4 + 1,17776640
8addda51,x0x1x2x3x4 + x0x1x2x4 + x0x1x2 + x0x1x3 + x0x1 + x0x2x3x4 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,142213120
a8dd9b51,x0x1x2x3x4 + x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,26664960
88ddbb51,x0x1x2x3x4 + x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,317440
88ddbb11,x0x1 + x0x3 + x0 + x1x4 + x1 + x3x4 + 1,9920
8c5dda51,x0x1x2 + x0x1x3 + x0x1 + x0x3x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,17776640
a89d9b51,x0x1x2 + x0x1 + x0x2x3 + x0x3 + x0 + x1x2x3 + x1x2 + x1x4 + x1 + x3x4 + 1,1666560
8eddda51,x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x3x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,106659840
aefdda51,x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x3x4 + x0x2x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,284426240
025dbf51,x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x3x4 + x0x3x4 + x0x3 + x0 + x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x1 + x3x4 + 1,19998720
88ddda51,x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x3x4 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,213319680
88dd9b51,x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3x4 + x0x2x3 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,3809280
ceddda51,x0x1x2x3x4 + x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x3x4 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,426639360
0eddda51,x0x1x2x3x4 + x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x3x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,142213120
425dbf51,x0x1x2x3x4 + x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x3x4 + x0x3x4 + x0x3 + x0 + x1x2x3x4 + x1x2x4 + x1x2 + x1x3x4 + x1x3 + x1x4 + x1 + x3x4 + 1,319979520
8cddda51,x0x1x2x3x4 + x0x1x2x4 + x0x1x2 + x0x1x3 + x0x1 + x0x3x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,426639360
88dddb51,x0x1x2x3x4 + x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3x4 + x0x2x3 + x0x3 + x0 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,20316160
289d9b51,x0x1x2x3x4 + x0x1x2 + x0x1 + x0x2x3 + x0x3 + x0 + x1x2x3 + x1x2 + x1x4 + x1 + x3x4 + 1,26664960
86fdda51,x0x1x2 + x0x1x3 + x0x1 + x0x2x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,26664960
88dddb71,x0x1 + x0x2x4 + x0x2 + x0x3 + x0 + x1x2x4 + x1x2 + x1x4 + x1 + x3x4 + 1,5079040
cefdda51,x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x4 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,170655744
0efdda51,x0x1x2 + x0x1x3x4 + x0x1x3 + x0x1 + x0x2x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,639959040
288d9b51,x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3x4 + x0x2x3 + x0x2x4 + x0x3 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x2x3x4 + x2x4 + x3x4 + 1,26664960
8cfdda51,x0x1x2 + x0x1x3 + x0x1 + x0x2x3x4 + x0x2x4 + x0x3x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,426639360
8cdddb51,x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1x3x4 + x0x1 + x0x2x3x4 + x0x2x3 + x0x3 + x0 + x1x2x3x4 + x1x2x4 + x1x2 + x1x3x4 + x1x4 + x1 + x3x4 + 1,35553280
8ccdda51,x0x1x2 + x0x1x3 + x0x1 + x0x2x3x4 + x0x2x4 + x0x3x4 + x0 + x1x2x3x4 + x1x2x3 + x1x2 + x1x3 + x1x4 + x1 + x2x3 + x2x4 + x3 + 1,79994880
289d9b41,x0x1x2x3 + x0x1x2x4 + x0x1 + x0x2x3x4 + x0x2x4 + x0x2 + x0x3 + x0 + x1x2x3x4 + x1x2x4 + x1x4 + x1 + x2x3x4 + x2x3 + x2x4 + x2 + x3x4 + 1,888832
488ddb51,x0x1x2x3x4 + x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3 + x0x2x4 + x0x3 + x0 + x1x2x3x4 + x1x2x4 + x1x2 + x1x4 + x1 + x2x3x4 + x2x4 + x3x4 + 1,106659840
ccfdda51,x0x1x2x3x4 + x0x1x2 + x0x1x3 + x0x1 + x0x2x3x4 + x0x2x4 + x0x3x4 + x0 + x1x2x3x4 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3x4 + x2x3 + x3 + 1,341311488
688d9b51,x0x1x2x3x4 + x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3x4 + x0x2x3 + x0x2x4 + x0x3 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x2x3x4 + x2x4 + x3x4 + 1,106659840
288d9b41,x0x1x2x3x4 + x0x1x2x3 + x0x1 + x0x2 + x0x3 + x0 + x1x4 + x1 + x2x3 + x2 + x3x4 + 1,1777664
288d1b41,x0x1 + x0x2 + x0x3 + x0 + x1x4 + x1 + x2x3 + x2 + x3x4 + 1,55552
dcfdda51,x0x1x2 + x0x1x3 + x0x1 + x0x2x4 + x0x3x4 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x3 + x1x4 + x1 + x2x3 + x3 + 1,10665984
68ad9b51,x0x1x2 + x0x1 + x0x2x3 + x0x3 + x0 + x1x2x3 + x1x2x4 + x1x2 + x1x4 + x1 + x2x3x4 + x2x4 + x3x4 + 1,3333120
688ddb51,x0x1x2x3 + x0x1x2x4 + x0x1x2 + x0x1 + x0x2x3x4 + x0x2x3 + x0x2x4 + x0x3 + x0 + x1x2x3x4 + x1x2x4 + x1x2 + x1x4 + x1 + x2x3x4 + x2x4 + x3x4 + 1,13332480
)csv";

} // namespace bfca::detail
