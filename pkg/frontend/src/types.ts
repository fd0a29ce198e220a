// Wire types shared with the analysis service.

export type VertexId = string
export type EdgePair = [VertexId, VertexId]

export interface DocumentVertex {
  id: VertexId
  x: number
  y: number
}

export interface FrameworkDocument {
  schema_version: 1
  vertices: DocumentVertex[]
  edges: EdgePair[]
  braces: EdgePair[]
  metadata?: Record<string, unknown>
}

export interface BracingWitness {
  ribbons: [number, number]
  cells: VertexId[][]
}

export interface VerdictPayload {
  status: 'Rigid' | 'Flexible'
  bracing_components: number[][]
  cartesian_nac_count: number
  min_braces_possible: number
  unbraced: boolean
  witnesses?: BracingWitness[]
}

export interface RibbonPayload {
  id: number
  edges: EdgePair[]
  simple: boolean
  edge_cut: boolean
  braced_edges: EdgePair[]
}

export interface GraphPayload {
  vertices: number[]
  edges: [number, number][]
}

export interface BracingGraphPayload extends GraphPayload {
  components: number[][]
}

export interface AnalyzeResponse {
  verdict: VerdictPayload
  ribbon_of: Record<string, number>
  ribbons: RibbonPayload[]
  ribbon_graph: GraphPayload
  bracing_graph: BracingGraphPayload
  four_cycles: [VertexId, VertexId, VertexId, VertexId][]
  braces: EdgePair[]
  cartesian_nac_count: number
  min_braces_possible: number
  completion_suggestion: EdgePair[]
}

export interface RefusalResponse {
  error: 'separation_violated'
  message: string
  offending_ribbons: number[]
  witness_pair?: [VertexId, VertexId]
}

export interface FlexResponse {
  t_values: number[]
  frames: Record<VertexId, [number, number]>[]
  coloring: Record<string, 'red' | 'blue'>
  base_vertex: VertexId
}

export type AnalyzeOutcome =
  | { kind: 'ok'; analysis: AnalyzeResponse }
  | { kind: 'refused'; refusal: RefusalResponse }

export interface ApiError {
  status: number
  message: string
}
