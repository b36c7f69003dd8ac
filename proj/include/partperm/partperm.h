#ifndef PARTPERM_H
#define PARTPERM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PP_OK = 0,
  PP_ERR_INVALID = 1,
  PP_ERR_OVERFLOW = 2,
  PP_ERR_NOT_COVERED = 3,
  PP_ERR_IO = 4,
  PP_ERR_INTERNAL = 5
} pp_status;

typedef enum { PP_METHOD_BRUTE = 0, PP_METHOD_DIRECT = 1, PP_METHOD_FORMULA = 2 } pp_method;

typedef enum { PP_FORMAT_JSON = 0, PP_FORMAT_CSV = 1, PP_FORMAT_BFILE = 2, PP_FORMAT_TEXT = 3 } pp_format;

typedef struct pp_perm pp_perm;
typedef struct pp_partial pp_partial;
typedef struct pp_cache pp_cache;
/* Library-owned string; release with pp_text_free. */
typedef struct pp_text pp_text;

/* Message of the last failure on the calling thread, "" if none. */
const char* pp_last_error(void);
const char* pp_status_name(pp_status status);

const char* pp_text_data(const pp_text* text);
size_t pp_text_size(const pp_text* text);
void pp_text_free(pp_text* text);

/* "3 1 2" or "312" */
pp_status pp_perm_parse(const char* text, pp_perm** out);
void pp_perm_free(pp_perm* perm);
int pp_perm_size(const pp_perm* perm);
pp_status pp_perm_str(const pp_perm* perm, pp_text** out);

/* "3 2 * 1 5 4" */
pp_status pp_partial_parse(const char* text, pp_partial** out);
void pp_partial_free(pp_partial* pi);
int pp_partial_n(const pp_partial* pi);
int pp_partial_k(const pp_partial* pi);
pp_status pp_partial_str(const pp_partial* pi, pp_text** out);
pp_status pp_avoids(const pp_partial* pi, const pp_perm* pattern, int* out);

/* NULL dir means no cache. */
pp_status pp_cache_open(const char* dir, pp_cache** out);
void pp_cache_free(pp_cache* cache);

/* s_n^k(p); cache may be NULL. */
pp_status pp_count(const pp_perm* pattern, int n, int k, pp_method method, int jobs, const pp_cache* cache,
                   uint64_t* out);
/* s_n^H(p) for 1-based hole positions. */
pp_status pp_count_holes(const pp_perm* pattern, int n, const int* holes, int hole_count, pp_method method,
                         const pp_cache* cache, uint64_t* out);
/* PP_ERR_NOT_COVERED when no closed form applies. */
pp_status pp_closed_form(const pp_perm* pattern, int n, int k, uint64_t* out);

/* s_n^k(p) for n = 1..max_n, index_shift added to every n. */
pp_status pp_sequence(const pp_perm* pattern, int k, int max_n, pp_method method, int jobs, const pp_cache* cache,
                      pp_format format, int index_shift, pp_text** out);

pp_status pp_classify(int length, int k, int horizon, int strong, int jobs, pp_text** json_out);

typedef struct {
  int max_n;    /* 0: target default */
  int length;   /* 0: target default */
  int max_size; /* 0: target default */
  int jobs;
} pp_verify_bounds;

size_t pp_verify_target_count(void);
const char* pp_verify_target_name(size_t index);
/* *passed is 1 when every case passes; the report is JSON. */
pp_status pp_verify(const char* target, const pp_verify_bounds* bounds, int* passed, pp_text** json_out);

size_t pp_biject_count(void);
const char* pp_biject_name(size_t index);
/* Runs one named bijection on a text input and reports every
   intermediate object as JSON. k is used by keylemma only. */
pp_status pp_biject(const char* which, const char* input, int k, pp_text** json_out);

#ifdef __cplusplus
}
#endif

#endif
