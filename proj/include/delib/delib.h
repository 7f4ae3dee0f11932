/* Copyright 2026 The delib Authors
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

/* C API of the delib ranking engine. Datasets are opaque handles; rich
 * inputs and outputs travel as JSON text (see README for the schemas).
 * Every function returning delib_status leaves a human-readable message
 * for the calling thread in delib_last_error() on failure. Output buffers
 * are owned by the caller and released with delib_buffer_free(). */

#ifndef DELIB_DELIB_H
#define DELIB_DELIB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum delib_status {
  DELIB_OK = 0,
  DELIB_ERR_INVALID = 1,  /* bad arguments or configuration (usage error) */
  DELIB_ERR_DATA = 2,     /* malformed or inconsistent input data */
  DELIB_ERR_IO = 3,       /* missing or unreadable files */
  DELIB_ERR_INTERNAL = 4
} delib_status;

typedef struct delib_dataset delib_dataset;

const char* delib_version(void);
const char* delib_status_name(delib_status status);

/* Comma-separated catalog of valid method names. */
const char* delib_methods(void);

/* Message describing the calling thread's most recent failure; empty
 * string if the last call succeeded. */
const char* delib_last_error(void);

void delib_buffer_free(char* buffer);

/* views_path may be NULL (inspection data is optional). */
delib_status delib_dataset_open(const char* proposals_path, const char* events_path,
                                const char* views_path, delib_dataset** out);

/* Loads proposals.{csv,jsonl}, events.{csv,jsonl} and, when present,
 * views.{csv,jsonl} from a directory. */
delib_status delib_dataset_open_dir(const char* dir, delib_dataset** out);

void delib_dataset_close(delib_dataset* dataset);

size_t delib_dataset_proposal_count(const delib_dataset* dataset);
size_t delib_dataset_event_count(const delib_dataset* dataset);

/* options_json: {"method": "...", "seed": ..., "now": ..., ...}.
 * *out_json receives a ranked-list document. */
delib_status delib_rank(const delib_dataset* dataset, const char* options_json,
                        char** out_json);

/* options_json: {"methods": [...], "k": ..., "attention": "...", ...}. */
delib_status delib_compare(const delib_dataset* dataset, const char* options_json,
                           char** out_json);

/* options_json: {"scenario": "path", "method": "...", "seed": ...,
 * "runs": ..., "experiment": "none"|"timing"|"feedback", ...}. */
delib_status delib_simulate(const char* options_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DELIB_DELIB_H */
