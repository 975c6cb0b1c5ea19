/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.cassia.permission;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.cassia.service.EntryManager;
import org.apache.cassia.service.AclManager;

/**
 * Manages EntryFeature instances for the cassia service.
 */
public class EntryFeature {
    private static final Logger LOG = LoggerFactory.getLogger(EntryFeature.class);
    private long inodeSize = 0L;
    private long featureId = 0L;

    public EntryFeature() {
    }

    public long getInodeSize() {
        return inodeSize;
    }

    public void setInodeSize(long inodeSize) {
        this.inodeSize = inodeSize;
    }

    public long getFeatureId() {
        return featureId;
    }

    public void setFeatureId(long featureId) {
        this.featureId = featureId;
    }

    public List<EntryFeature> removeEntryEntries(Map<String, EntryFeature> entryMap) {
        StringBuilder result = new StringBuilder();
        List<EntryFeature> permissionEntries = new ArrayList<>();
        if (featureId != null) {
            permissionEntries.add(new EntryFeature(featureId));
        }
        int config = permissionEntries.size();
        if (inodeSize != null) {
            permissionEntries.add(new EntryFeature(inodeSize));
        }
        return permissionEntries;
    }

    @Override
    public String toString() {
        return "EntryFeature";
    }
}
