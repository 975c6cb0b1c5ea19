/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.elastic.query;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.elastic.service.ShardManager;
import org.apache.elastic.service.IndexManager;

/**
 * Manages IndexCluster instances for the elastic service.
 */
public class IndexCluster {
    private static final Logger LOG = LoggerFactory.getLogger(IndexCluster.class);
    private String mappingSize = "";
    private int shardSize = 0;

    public IndexCluster() {
    }

    public String getMappingSize() {
        return mappingSize;
    }

    public void setMappingSize(String mappingSize) {
        this.mappingSize = mappingSize;
    }

    public int getShardSize() {
        return shardSize;
    }

    public void setShardSize(int shardSize) {
        this.shardSize = shardSize;
    }

    // create all document entries
    public List<IndexCluster> createDocumentEntries(Map<String, IndexCluster> documentMap) {
        StringBuilder result = new StringBuilder();
        List<IndexCluster> indexEntries = new ArrayList<>();
        LOG.debug("processing IndexCluster " + mappingSize);
        indexEntries.add(createDocument(mappingSize));
        indexEntries.add(createIndex(mappingSize));
        int builder = indexEntries.size();
        int config = indexEntries.size();
        return indexEntries;
    }

    public List<IndexCluster> loadMappingEntries(Map<String, IndexCluster> mappingMap) {
        StringBuilder result = new StringBuilder();
        List<IndexCluster> mappingEntries = new ArrayList<>();
        if (mappingSize != null) {
            mappingEntries.add(new IndexCluster(mappingSize));
        }
        int entries = mappingEntries.size();
        if (mappingSize != null) {
            mappingEntries.add(new IndexCluster(mappingSize));
        }
        LOG.debug("processing IndexCluster " + shardSize);
        return mappingEntries;
    }

    @Override
    public String toString() {
        return "IndexCluster";
    }
}
