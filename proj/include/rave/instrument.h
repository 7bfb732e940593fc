/* Copyright 2026 The RAVE Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Guest-side instrumentation for RISC-V programs traced by rave.
 *
 * Every marker is an instruction that writes x0, so it has no architectural
 * effect:
 *
 *   qemu_start_trace()               li  x0, -3
 *   qemu_stop_trace()                li  x0, -4
 *   qemu_restart_trace()             li  x0, -2
 *   qemu_event_and_value(e, v)       or  x0, <e>, <v>
 *   qemu_name_event(e, "name")       lui x0, e; li x0, -1; lui x0, 'n'; ...; li x0, -1
 *   qemu_name_value(e, v, "name")    lui x0, e; lui x0, v; li x0, -1; ...; li x0, -1
 *
 * Name macros need a string literal of at most 64 characters and event and
 * value ids that are compile-time constants below 2^20. Characters travel one
 * per lui, in the low byte of the immediate.
 *
 * The rave_enc_* functions produce the same instruction words on any host and
 * are what the analyzer tests use.
 */

#ifndef RAVE_INSTRUMENT_H_
#define RAVE_INSTRUMENT_H_

#include <stddef.h>
#include <stdint.h>

#define RAVE_MARK_DELIMITER (-1)
#define RAVE_MARK_RESTART (-2)
#define RAVE_MARK_START (-3)
#define RAVE_MARK_STOP (-4)
#define RAVE_NAME_MAX 64

static inline uint32_t rave_enc_li_x0(int32_t imm) {
  return ((uint32_t)(imm & 0xfff) << 20) | 0x13u;
}

static inline uint32_t rave_enc_lui_x0(uint32_t imm20) {
  return ((imm20 & 0xfffffu) << 12) | 0x37u;
}

/* or x0, x<rs1>, x<rs2> */
static inline uint32_t rave_enc_or_x0(unsigned rs1, unsigned rs2) {
  return ((uint32_t)(rs2 & 31u) << 20) | ((uint32_t)(rs1 & 31u) << 15) | (6u << 12) | 0x33u;
}

static inline uint32_t rave_enc_start_trace(void) { return rave_enc_li_x0(RAVE_MARK_START); }
static inline uint32_t rave_enc_stop_trace(void) { return rave_enc_li_x0(RAVE_MARK_STOP); }
static inline uint32_t rave_enc_restart_trace(void) { return rave_enc_li_x0(RAVE_MARK_RESTART); }
static inline uint32_t rave_enc_delimiter(void) { return rave_enc_li_x0(RAVE_MARK_DELIMITER); }

/* Words of a naming sequence for `name` (NUL-terminated, truncated to
 * RAVE_NAME_MAX). has_value selects value naming. Writes at most `cap` words
 * and returns the full sequence length. */
static inline size_t rave_encode_name(uint32_t event_id, int has_value, uint32_t value_id,
                                      const char* name, uint32_t* out, size_t cap) {
  size_t n = 0;
#define RAVE_PUT_(w)            \
  do {                          \
    uint32_t w_ = (w);          \
    if (n < cap) out[n] = w_;   \
    ++n;                        \
  } while (0)
  RAVE_PUT_(rave_enc_lui_x0(event_id));
  if (has_value) RAVE_PUT_(rave_enc_lui_x0(value_id));
  RAVE_PUT_(rave_enc_delimiter());
  for (size_t i = 0; i < RAVE_NAME_MAX && name[i] != '\0'; ++i) {
    RAVE_PUT_(rave_enc_lui_x0((unsigned char)name[i]));
  }
  RAVE_PUT_(rave_enc_delimiter());
#undef RAVE_PUT_
  return n;
}

#if defined(__riscv)

#define RAVE_ASM_(body) \
  __asm__ __volatile__(".option push\n.option norvc\n" body "\n.option pop" ::: "memory")

#define qemu_start_trace() RAVE_ASM_("li x0, -3")
#define qemu_stop_trace() RAVE_ASM_("li x0, -4")
#define qemu_restart_trace() RAVE_ASM_("li x0, -2")

#define qemu_event_and_value(e, v)                                                    \
  __asm__ __volatile__(".option push\n.option norvc\nor x0, %0, %1\n.option pop" ::   \
                           "r"((unsigned long)(e)), "r"((unsigned long)(v)) : "memory")

/* One lui per character; positions past the end of the literal assemble to
 * nothing. */
#define RAVE_CH_(s, i)                                                                 \
  __asm__ __volatile__(".option push\n.option norvc\n.if %0\nlui x0, %0\n.endif\n"    \
                       ".option pop" ::"i"((i) < sizeof(s) ? (unsigned char)(s)[(i) < sizeof(s) ? (i) : 0] : 0))

#define RAVE_CH8_(s, b)                                                                \
  RAVE_CH_(s, (b) + 0); RAVE_CH_(s, (b) + 1); RAVE_CH_(s, (b) + 2); RAVE_CH_(s, (b) + 3); \
  RAVE_CH_(s, (b) + 4); RAVE_CH_(s, (b) + 5); RAVE_CH_(s, (b) + 6); RAVE_CH_(s, (b) + 7)

#define RAVE_CHARS_(s)                                                     \
  RAVE_CH8_(s, 0); RAVE_CH8_(s, 8); RAVE_CH8_(s, 16); RAVE_CH8_(s, 24);    \
  RAVE_CH8_(s, 32); RAVE_CH8_(s, 40); RAVE_CH8_(s, 48); RAVE_CH8_(s, 56)

#define qemu_name_event(e, s)                                                          \
  do {                                                                                 \
    __asm__ __volatile__(".option push\n.option norvc\nlui x0, %0\nli x0, -1\n"       \
                         ".option pop" ::"i"(e) : "memory");                           \
    RAVE_CHARS_(s);                                                                    \
    RAVE_ASM_("li x0, -1");                                                            \
  } while (0)

#define qemu_name_value(e, v, s)                                                       \
  do {                                                                                 \
    __asm__ __volatile__(".option push\n.option norvc\nlui x0, %0\nlui x0, %1\n"      \
                         "li x0, -1\n.option pop" ::"i"(e), "i"(v) : "memory");        \
    RAVE_CHARS_(s);                                                                    \
    RAVE_ASM_("li x0, -1");                                                            \
  } while (0)

#endif /* __riscv */

#endif /* RAVE_INSTRUMENT_H_ */
