#include "tables.hpp"

#include <stdexcept>

namespace qrm::tables {

namespace {

// p_l(x; g, D), l = 0..6
const char* const kP[7] = {
    "1",
    "4*g^2*x + (4*g^4+2*g^2+D^2)",
    "16*g^4*x^2 + 8*g^2*(D^2+4*g^4+2*g^2)*x + (D^4+D^2+8*D^2*g^4+4*D^2*g^2+16*g^8+16*g^6)",
    "64*g^6*x^3 + 48*g^4*(D^2+4*g^4+2*g^2)*x^2 + 4*g^2*(3*D^4+4*D^2+24*D^2*g^4+12*D^2*g^2+48*g^8"
    "+48*g^6-4*g^4)*x + D^6+4*D^4+4*D^2+48*D^2*g^8+48*D^2*g^6+12*D^4*g^4+12*D^2*g^4+6*D^4*g^2"
    "+8*D^2*g^2+64*g^12+96*g^10-16*g^8-24*g^6",
    "256*g^8*x^4 + 256*g^6*(D^2+4*g^4+2*g^2)*x^3 + 32*g^4*(3*D^4+5*D^2+24*D^2*g^4+12*D^2*g^2+48*g^8"
    "+48*g^6-8*g^4)*x^2 + 16*g^2*(D^6+5*D^4+6*D^2+48*D^2*g^8+48*D^2*g^6+12*D^4*g^4+12*D^2*g^4"
    "+6*D^4*g^2+10*D^2*g^2+64*g^12+96*g^10-32*g^8-32*g^6)*x + D^8+10*D^6+33*D^4+36*D^2+256*D^2*g^12"
    "+384*D^2*g^10+96*D^4*g^8+32*D^2*g^8+96*D^4*g^6+32*D^2*g^6+16*D^6*g^4+64*D^4*g^4+64*D^2*g^4"
    "+8*D^6*g^2+40*D^4*g^2+48*D^2*g^2+256*g^16+512*g^14-256*g^12-512*g^10",
    "1024*g^10*x^5 + 1280*g^8*(D^2+4*g^4+2*g^2)*x^4 + 640*g^6*(D^4+2*D^2+8*D^2*g^4+4*D^2*g^2+16*g^8"
    "+16*g^6-4*g^4)*x^3 + 32*g^4*(5*D^6+30*D^4+42*D^2+240*D^2*g^8+240*D^2*g^6+60*D^4*g^4+60*D^2*g^4"
    "+30*D^4*g^2+60*D^2*g^2+320*g^12+480*g^10-240*g^8-200*g^6)*x^2 + 4*g^2*(5*D^8+60*D^6+232*D^4"
    "+288*D^2+1280*D^2*g^12+1920*D^2*g^10+480*D^4*g^8+480*D^4*g^6+160*D^2*g^6+80*D^6*g^4+360*D^4*g^4"
    "+400*D^2*g^4+40*D^6*g^2+240*D^4*g^2+336*D^2*g^2+1280*g^16+2560*g^14-1920*g^12-3200*g^10"
    "+144*g^8)*x + D^10+20*D^8+148*D^6+480*D^4+576*D^2+1280*D^2*g^16+2560*D^2*g^14+640*D^4*g^12"
    "-640*D^2*g^12+960*D^4*g^10-1280*D^2*g^10+160*D^6*g^8+480*D^4*g^8+400*D^2*g^8+160*D^6*g^6"
    "+560*D^4*g^6+480*D^2*g^6+20*D^8*g^4+200*D^6*g^4+656*D^4*g^4+720*D^2*g^4+10*D^8*g^2+120*D^6*g^2"
    "+464*D^4*g^2+576*D^2*g^2+1024*g^20+2560*g^18-2560*g^16-6400*g^14+576*g^12+1440*g^10",
    "4096*g^12*x^6 + 6144*g^10*(D^2+4*g^4+2*g^2)*x^5 + 1280*g^8*(3*D^4+7*D^2+24*D^2*g^4+12*D^2*g^2"
    "+48*g^8+48*g^6-16*g^4)*x^4 + 256*g^6*(5*D^6+35*D^4+56*D^2+240*D^2*g^8+240*D^2*g^6+60*D^4*g^4"
    "+60*D^2*g^4+30*D^4*g^2+70*D^2*g^2+320*g^12+480*g^10-320*g^8-240*g^6)*x^3 + 16*g^4*(15*D^8"
    "+210*D^6+931*D^4+1296*D^2+3840*D^2*g^12+5760*D^2*g^10+1440*D^4*g^8-480*D^2*g^8+1440*D^4*g^6"
    "+480*D^2*g^6+240*D^6*g^4+1200*D^4*g^4+1456*D^2*g^4+120*D^6*g^2+840*D^4*g^2+1344*D^2*g^2"
    "+3840*g^16+7680*g^14-7680*g^12-11520*g^10+1024*g^8)*x^2 + 8*g^2*(3*D^10+70*D^8+595*D^6+2176*D^4"
    "+2880*D^2+3840*D^2*g^16+7680*D^2*g^14+1920*D^4*g^12-3200*D^2*g^12+2880*D^4*g^10-4800*D^2*g^10"
    "+480*D^6*g^8+1440*D^4*g^8+1472*D^2*g^8+480*D^6*g^6+1920*D^4*g^6+1792*D^2*g^6+60*D^8*g^4"
    "+680*D^6*g^4+2492*D^4*g^4+3008*D^2*g^4+30*D^8*g^2+420*D^6*g^2+1862*D^4*g^2+2592*D^2*g^2"
    "+3072*g^20+7680*g^18-10240*g^16-23040*g^14+4096*g^12+6144*g^10)*x + D^12+35*D^10+483*D^8"
    "+3281*D^6+10960*D^4+14400*D^2+6144*D^2*g^20+15360*D^2*g^18+3840*D^4*g^16-11520*D^2*g^16"
    "+7680*D^4*g^14-28160*D^2*g^14+1280*D^6*g^12+1280*D^4*g^12+2816*D^2*g^12+1920*D^6*g^10"
    "+1920*D^4*g^10+5120*D^2*g^10+240*D^8*g^8+2080*D^6*g^8+6064*D^4*g^8+6400*D^2*g^8+240*D^8*g^6"
    "+2400*D^6*g^6+7728*D^4*g^6+8448*D^2*g^6+24*D^10*g^4+480*D^8*g^4+3528*D^6*g^4+11392*D^4*g^4"
    "+13824*D^2*g^4+12*D^10*g^2+280*D^8*g^2+2380*D^6*g^2+8704*D^4*g^2+11520*D^2*g^2+4096*g^24"
    "+12288*g^22-20480*g^20-61440*g^18+16384*g^16+49152*g^14",
};

// J_l = P [[alpha, beta], [gamma, delta]]; monomials are products in the written order
const char* const kJ[7][3] = {
    {
        "0",
        "1",
        "0",
    },
    {
        "D",
        "2*g*(g-a)",
        "D",
    },
    {
        "-2*a*g*D + 2*ad*g*D + 4*g^2*D + D",
        "4*a^2*g^2 - 8*a*g^3 + 4*g^4 + D^2",
        "-2*a*g*D + 2*ad*g*D + 4*g^2*D - D",
    },
    {
        "-2*D - 8*g^2*D - 12*g^4*D - D^3 - 4*g*D*ad - 12*g^3*D*ad - 4*g^2*D*ad^2 + 4*g*D*a + 12*g^3*D*a "
        "+ 4*g^2*D*a*ad - 4*g^2*D*a^2",
        "-8*g^6 - 6*g^2*D^2 - 2*g*D^2*ad + 24*g^5*a + 4*g*D^2*a - 24*g^4*a^2 + 8*g^3*a^3",
        "-2*D + 4*g^2*D - 12*g^4*D - D^3 + 4*g*D*ad - 12*g^3*D*ad - 4*g^2*D*ad^2 - 4*g*D*a + 12*g^3*D*a "
        "+ 4*g^2*D*a*ad - 4*g^2*D*a^2",
    },
    {
        "6*D + 2*D^3 + 24*D*g^2 + 8*D^3*g^2 + 40*D*g^4 + 32*D*g^6 + 12*D*g*ad + 4*D^3*g*ad + 40*D*g^3*ad"
        " + 48*D*g^5*ad + 12*D*g^2*ad^2 + 32*D*g^4*ad^2 + 8*D*g^3*ad^3 - 12*D*g*a - 4*D^3*g*a -"
        " 40*D*g^3*a - 48*D*g^5*a - 16*D*g^2*a*ad - 32*D*g^4*a*ad - 8*D*g^3*a*ad^2 + 12*D*g^2*a^2 +"
        " 32*D*g^4*a^2 + 8*D*g^3*a^2*ad - 8*D*g^3*a^3",
        "3*D^2 + D^4 + 4*D^2*g^2 + 24*D^2*g^4 + 16*g^8 + 16*D^2*g^3*ad + 4*D^2*g^2*ad^2 - 32*D^2*g^3*a -"
        " 64*g^7*a - 8*D^2*g^2*a*ad + 12*D^2*g^2*a^2 + 96*g^6*a^2 - 64*g^5*a^3 + 16*g^4*a^4",
        "-6*D - 2*D^3 + 8*D*g^2 + 8*D^3*g^2 - 8*D*g^4 + 32*D*g^6 + 12*D*g*ad + 4*D^3*g*ad - 24*D*g^3*ad "
        "+ 48*D*g^5*ad - 12*D*g^2*ad^2 + 32*D*g^4*ad^2 + 8*D*g^3*ad^3 - 12*D*g*a - 4*D^3*g*a +"
        " 24*D*g^3*a - 48*D*g^5*a + 16*D*g^2*a*ad - 32*D*g^4*a*ad - 8*D*g^3*a*ad^2 - 12*D*g^2*a^2 +"
        " 32*D*g^4*a^2 + 8*D*g^3*a^2*ad - 8*D*g^3*a^3",
    },
    {
        "-24*D - 10*D^3 - D^5 - 96*D*g^2 - 28*D^3*g^2 - 168*D*g^4 - 40*D^3*g^4 - 160*D*g^6 - 80*D*g^8 -"
        " 48*D*g*ad - 12*D^3*g*ad - 168*D*g^3*ad - 40*D^3*g^3*ad - 240*D*g^5*ad - 160*D*g^7*ad -"
        " 48*D*g^2*ad^2 - 12*D^3*g^2*ad^2 - 144*D*g^4*ad^2 - 160*D*g^6*ad^2 - 32*D*g^3*ad^3 -"
        " 80*D*g^5*ad^3 - 16*D*g^4*ad^4 + 48*D*g*a + 12*D^3*g*a + 168*D*g^3*a + 40*D^3*g^3*a +"
        " 240*D*g^5*a + 160*D*g^7*a + 72*D*g^2*a*ad + 16*D^3*g^2*a*ad + 192*D*g^4*a*ad + 160*D*g^6*a*ad "
        "+ 48*D*g^3*a*ad^2 + 80*D*g^5*a*ad^2 + 16*D*g^4*a*ad^3 - 48*D*g^2*a^2 - 12*D^3*g^2*a^2 -"
        " 144*D*g^4*a^2 - 160*D*g^6*a^2 - 48*D*g^3*a^2*ad - 80*D*g^5*a^2*ad - 16*D*g^4*a^2*ad^2 +"
        " 32*D*g^3*a^3 + 80*D*g^5*a^3 + 16*D*g^4*a^3*ad - 16*D*g^4*a^4",
        "-32*D^2*g^2 - 10*D^4*g^2 - 40*D^2*g^4 - 80*D^2*g^6 - 32*g^10 - 16*D^2*g*ad - 4*D^4*g*ad -"
        " 16*D^2*g^3*ad - 80*D^2*g^5*ad - 40*D^2*g^4*ad^2 - 8*D^2*g^3*ad^3 + 24*D^2*g*a + 6*D^4*g*a +"
        " 24*D^2*g^3*a + 160*D^2*g^5*a + 160*g^9*a + 80*D^2*g^4*a*ad + 16*D^2*g^3*a*ad^2 -"
        " 120*D^2*g^4*a^2 - 320*g^8*a^2 - 24*D^2*g^3*a^2*ad + 32*D^2*g^3*a^3 + 320*g^7*a^3 - 160*g^6*a^4"
        " + 32*g^5*a^5",
        "-24*D - 10*D^3 - D^5 + 24*D*g^2 + 12*D^3*g^2 - 8*D*g^4 - 40*D^3*g^4 - 80*D*g^8 + 48*D*g*ad +"
        " 12*D^3*g*ad - 72*D*g^3*ad - 40*D^3*g^3*ad + 80*D*g^5*ad - 160*D*g^7*ad - 48*D*g^2*ad^2 -"
        " 12*D^3*g^2*ad^2 + 96*D*g^4*ad^2 - 160*D*g^6*ad^2 + 32*D*g^3*ad^3 - 80*D*g^5*ad^3 -"
        " 16*D*g^4*ad^4 - 48*D*g*a - 12*D^3*g*a + 72*D*g^3*a + 40*D^3*g^3*a - 80*D*g^5*a + 160*D*g^7*a +"
        " 72*D*g^2*a*ad + 16*D^3*g^2*a*ad - 128*D*g^4*a*ad + 160*D*g^6*a*ad - 48*D*g^3*a*ad^2 +"
        " 80*D*g^5*a*ad^2 + 16*D*g^4*a*ad^3 - 48*D*g^2*a^2 - 12*D^3*g^2*a^2 + 96*D*g^4*a^2 -"
        " 160*D*g^6*a^2 + 48*D*g^3*a^2*ad - 80*D*g^5*a^2*ad - 16*D*g^4*a^2*ad^2 - 32*D*g^3*a^3 +"
        " 80*D*g^5*a^3 + 16*D*g^4*a^3*ad - 16*D*g^4*a^4",
    },
    {
        "120*D + 39*D^3 + 3*D^5 + 480*D*g^2 + 160*D^3*g^2 + 12*D^5*g^2 + 864*D*g^4 + 216*D^3*g^4 +"
        " 896*D*g^6 + 160*D^3*g^6 + 560*D*g^8 + 192*D*g^10 + 240*D*g*ad + 78*D^3*g*ad + 6*D^5*g*ad +"
        " 864*D*g^3*ad + 192*D^3*g^3*ad + 1344*D*g^5*ad + 240*D^3*g^5*ad + 1120*D*g^7*ad + 480*D*g^9*ad "
        "+ 240*D*g^2*ad^2 + 48*D^3*g^2*ad^2 + 768*D*g^4*ad^2 + 144*D^3*g^4*ad^2 + 1008*D*g^6*ad^2 +"
        " 640*D*g^8*ad^2 + 160*D*g^3*ad^3 + 32*D^3*g^3*ad^3 + 448*D*g^5*ad^3 + 480*D*g^7*ad^3 +"
        " 80*D*g^4*ad^4 + 192*D*g^6*ad^4 + 32*D*g^5*ad^5 - 240*D*g*a - 78*D^3*g*a - 6*D^5*g*a -"
        " 864*D*g^3*a - 192*D^3*g^3*a - 1344*D*g^5*a - 240*D^3*g^5*a - 1120*D*g^7*a - 480*D*g^9*a -"
        " 384*D*g^2*a*ad - 72*D^3*g^2*a*ad - 1152*D*g^4*a*ad - 192*D^3*g^4*a*ad - 1344*D*g^6*a*ad -"
        " 640*D*g^8*a*ad - 288*D*g^3*a*ad^2 - 48*D^3*g^3*a*ad^2 - 672*D*g^5*a*ad^2 - 480*D*g^7*a*ad^2 -"
        " 128*D*g^4*a*ad^3 - 192*D*g^6*a*ad^3 - 32*D*g^5*a*ad^4 + 240*D*g^2*a^2 + 48*D^3*g^2*a^2 +"
        " 768*D*g^4*a^2 + 144*D^3*g^4*a^2 + 1008*D*g^6*a^2 + 640*D*g^8*a^2 + 288*D*g^3*a^2*ad +"
        " 48*D^3*g^3*a^2*ad + 672*D*g^5*a^2*ad + 480*D*g^7*a^2*ad + 144*D*g^4*a^2*ad^2 +"
        " 192*D*g^6*a^2*ad^2 + 32*D*g^5*a^2*ad^3 - 160*D*g^3*a^3 - 32*D^3*g^3*a^3 - 448*D*g^5*a^3 -"
        " 480*D*g^7*a^3 - 128*D*g^4*a^3*ad - 192*D*g^6*a^3*ad - 32*D*g^5*a^3*ad^2 + 80*D*g^4*a^4 +"
        " 192*D*g^6*a^4 + 32*D*g^5*a^4*ad - 32*D*g^5*a^5",
        "40*D^2 + 13*D^4 + D^6 + 64*D^2*g^2 + 12*D^4*g^2 + 228*D^2*g^4 + 60*D^4*g^4 + 240*D^2*g^6 +"
        " 240*D^2*g^8 + 64*g^12 + 200*D^2*g^3*ad + 48*D^4*g^3*ad + 192*D^2*g^5*ad + 320*D^2*g^7*ad +"
        " 60*D^2*g^2*ad^2 + 12*D^4*g^2*ad^2 + 48*D^2*g^4*ad^2 + 240*D^2*g^6*ad^2 + 96*D^2*g^5*ad^3 +"
        " 16*D^2*g^4*ad^4 - 304*D^2*g^3*a - 72*D^4*g^3*a - 288*D^2*g^5*a - 640*D^2*g^7*a - 384*g^11*a -"
        " 128*D^2*g^2*a*ad - 24*D^4*g^2*a*ad - 96*D^2*g^4*a*ad - 480*D^2*g^6*a*ad - 192*D^2*g^5*a*ad^2 -"
        " 32*D^2*g^4*a*ad^3 + 120*D^2*g^2*a^2 + 24*D^4*g^2*a^2 + 96*D^2*g^4*a^2 + 720*D^2*g^6*a^2 +"
        " 960*g^10*a^2 + 288*D^2*g^5*a^2*ad + 48*D^2*g^4*a^2*ad^2 - 384*D^2*g^5*a^3 - 1280*g^9*a^3 -"
        " 64*D^2*g^4*a^3*ad + 80*D^2*g^4*a^4 + 960*g^8*a^4 - 384*g^7*a^5 + 64*g^6*a^6",
        "-120*D - 39*D^3 - 3*D^5 + 96*D*g^2 + 88*D^3*g^2 + 12*D^5*g^2 - 24*D^3*g^4 - 64*D*g^6 +"
        " 160*D^3*g^6 + 80*D*g^8 + 192*D*g^10 + 240*D*g*ad + 78*D^3*g*ad + 6*D^5*g*ad - 288*D*g^3*ad -"
        " 96*D^3*g^3*ad + 192*D*g^5*ad + 240*D^3*g^5*ad - 160*D*g^7*ad + 480*D*g^9*ad - 240*D*g^2*ad^2 -"
        " 48*D^3*g^2*ad^2 + 384*D*g^4*ad^2 + 144*D^3*g^4*ad^2 - 432*D*g^6*ad^2 + 640*D*g^8*ad^2 +"
        " 160*D*g^3*ad^3 + 32*D^3*g^3*ad^3 - 320*D*g^5*ad^3 + 480*D*g^7*ad^3 - 80*D*g^4*ad^4 +"
        " 192*D*g^6*ad^4 + 32*D*g^5*ad^5 - 240*D*g*a - 78*D^3*g*a - 6*D^5*g*a + 288*D*g^3*a +"
        " 96*D^3*g^3*a - 192*D*g^5*a - 240*D^3*g^5*a + 160*D*g^7*a - 480*D*g^9*a + 384*D*g^2*a*ad +"
        " 72*D^3*g^2*a*ad - 576*D*g^4*a*ad - 192*D^3*g^4*a*ad + 576*D*g^6*a*ad - 640*D*g^8*a*ad -"
        " 288*D*g^3*a*ad^2 - 48*D^3*g^3*a*ad^2 + 480*D*g^5*a*ad^2 - 480*D*g^7*a*ad^2 + 128*D*g^4*a*ad^3 "
        "- 192*D*g^6*a*ad^3 - 32*D*g^5*a*ad^4 - 240*D*g^2*a^2 - 48*D^3*g^2*a^2 + 384*D*g^4*a^2 +"
        " 144*D^3*g^4*a^2 - 432*D*g^6*a^2 + 640*D*g^8*a^2 + 288*D*g^3*a^2*ad + 48*D^3*g^3*a^2*ad -"
        " 480*D*g^5*a^2*ad + 480*D*g^7*a^2*ad - 144*D*g^4*a^2*ad^2 + 192*D*g^6*a^2*ad^2 +"
        " 32*D*g^5*a^2*ad^3 - 160*D*g^3*a^3 - 32*D^3*g^3*a^3 + 320*D*g^5*a^3 - 480*D*g^7*a^3 +"
        " 128*D*g^4*a^3*ad - 192*D*g^6*a^3*ad - 32*D*g^5*a^3*ad^2 - 80*D*g^4*a^4 + 192*D*g^6*a^4 +"
        " 32*D*g^5*a^4*ad - 32*D*g^5*a^5",
    },
};

}  // namespace

const char* p_table(int ell) {
  if (ell < 0 || ell > 6) throw std::out_of_range("p_table: 0 <= l <= 6");
  return kP[ell];
}

std::array<const char*, 3> j_table(int ell) {
  if (ell < 0 || ell > 6) throw std::out_of_range("j_table: 0 <= l <= 6");
  return {kJ[ell][0], kJ[ell][1], kJ[ell][2]};
}

}  // namespace qrm::tables
